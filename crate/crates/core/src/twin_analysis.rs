//! Twin pairs inside prime-indexed windows `Q(M) ⊂ [p_M, 2 p_M]`, the pseudo
//! twin sequence, the window-to-window cardinality recurrence and the `(x, 2x)`
//! interval scan.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::derived_sets::{member_intersection, q_min, SearchLimit};
use crate::error::{Error, Result};
use crate::primes::{is_prime, PrimeTable};

/// Counts above this are annotated as "far greater than 1" in reports.
pub const DEFAULT_GGT_THRESHOLD: usize = 10;

/// `(q, q + 2)` with both members prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwinPair {
    q: u64,
}

impl TwinPair {
    /// `None` unless `q >= 3` and both `q`, `q + 2` are prime.
    pub fn new(q: u64) -> Option<Self> {
        (q >= 3 && is_prime(q) && q.checked_add(2).is_some_and(is_prime)).then_some(TwinPair { q })
    }

    pub(crate) fn from_verified(q: u64) -> Self {
        debug_assert!(is_prime(q) && is_prime(q + 2));
        TwinPair { q }
    }

    pub fn lower(&self) -> u64 {
        self.q
    }

    pub fn upper(&self) -> u64 {
        self.q + 2
    }
}

impl fmt::Display for TwinPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.q, self.q + 2)
    }
}

/// Which pairs count as lying in the window of `p_M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum IntervalConvention {
    /// `p_M <= q` and `q + 2 <= 2 p_M`.
    #[default]
    Program,
    /// `p_M < q <= 2 p_M`, upper member unconstrained.
    Strict,
}

impl IntervalConvention {
    pub fn admits(self, q: u64, p_m: u64) -> bool {
        match self {
            IntervalConvention::Program => p_m <= q && q + 2 <= 2 * p_m,
            IntervalConvention::Strict => p_m < q && q <= 2 * p_m,
        }
    }

    /// Inclusive range of admissible lower members.
    pub fn lower_range(self, p_m: u64) -> (u64, u64) {
        match self {
            IntervalConvention::Program => (p_m, 2 * p_m - 2),
            IntervalConvention::Strict => (p_m + 1, 2 * p_m),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            IntervalConvention::Program => "program",
            IntervalConvention::Strict => "strict",
        }
    }
}

impl fmt::Display for IntervalConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IntervalConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "program" => Ok(IntervalConvention::Program),
            "strict" => Ok(IntervalConvention::Strict),
            other => Err(Error::Parse(format!("unknown interval convention `{other}`"))),
        }
    }
}

/// Sorted lower members of every twin pair found in a prime list.
#[derive(Debug, Clone)]
struct TwinLowers(Vec<u64>);

impl TwinLowers {
    /// Lower members `q` in `[lo, hi]`, from a prime scan of `[lo, hi + 2]`.
    fn scan(table: &PrimeTable, lo: u64, hi: u64) -> Self {
        if lo > hi {
            return TwinLowers(Vec::new());
        }
        let primes = table.primes_in(lo, hi + 2);
        let lowers = primes
            .windows(2)
            .filter(|w| w[1] == w[0] + 2 && w[0] >= 3)
            .map(|w| w[0])
            .collect();
        TwinLowers(lowers)
    }

    fn count_in(&self, lo: u64, hi: u64) -> usize {
        if lo > hi {
            return 0;
        }
        let a = self.0.partition_point(|&q| q < lo);
        let b = self.0.partition_point(|&q| q <= hi);
        b.saturating_sub(a)
    }

    fn first_in(&self, lo: u64, hi: u64) -> Option<u64> {
        let a = self.0.partition_point(|&q| q < lo);
        self.0.get(a).copied().filter(|&q| q <= hi)
    }

    fn slice_in(&self, lo: u64, hi: u64) -> &[u64] {
        let a = self.0.partition_point(|&q| q < lo);
        let b = self.0.partition_point(|&q| q <= hi).max(a);
        &self.0[a..b]
    }
}

/// Twin content `Q(M)` of the window of `p_M` under one convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QWindow {
    pub m: usize,
    pub p_m: u64,
    pub lo: u64,
    pub hi: u64,
    pub convention: IntervalConvention,
    pub members: Vec<TwinPair>,
}

impl QWindow {
    pub fn cardinality(&self) -> usize {
        self.members.len()
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::Domain(format!("window index M must be >= 2, got {m}")));
    }
    Ok(())
}

/// `Q(M)` by direct prime scan of the window.
pub fn q_window(m: usize, convention: IntervalConvention, table: &PrimeTable) -> Result<QWindow> {
    check_m(m)?;
    let p_m = table.nth(m)?;
    let (a, b) = convention.lower_range(p_m);
    let members = TwinLowers::scan(table, a, b)
        .0
        .into_iter()
        .map(TwinPair::from_verified)
        .collect();
    Ok(QWindow { m, p_m, lo: p_m, hi: 2 * p_m, convention, members })
}

/// `Q(M)` through the derived sets: odd `a` in `S_{p_2} ∩ ... ∩ S_{p_M}`
/// restricted to the window. Under the program convention the left endpoint
/// `q = p_M` is also admitted when `p_M + 2` has no factor among `p_2..p_M`.
///
/// Every window value is below `p_M^2`, so coprimality to `p_2..p_M` alone
/// forces primality; no primality test is used on this path.
pub fn q_window_derived(m: usize, convention: IntervalConvention, table: &PrimeTable) -> Result<QWindow> {
    check_m(m)?;
    let p_m = table.nth(m)?;
    let moduli = &table.as_slice()[1..m];
    let (a, b) = convention.lower_range(p_m);
    let mut members = Vec::new();
    if convention == IntervalConvention::Program && moduli.iter().all(|&p| (p_m + 2) % p != 0) {
        members.push(TwinPair::from_verified(p_m));
    }
    let mut q = (a.max(p_m + 1)) | 1;
    while q <= b {
        if member_intersection(q, m, table)? && convention.admits(q, p_m) {
            members.push(TwinPair::from_verified(q));
        }
        q += 2;
    }
    Ok(QWindow { m, p_m, lo: p_m, hi: 2 * p_m, convention, members })
}

/// `(M, p_M, |Q(M)|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesPoint {
    pub m: usize,
    pub p_m: u64,
    pub count: usize,
}

/// Window index `M` for a 1-based row of a count table that starts at `M = 2`.
pub fn table_row_to_m(row: usize) -> usize {
    row + 1
}

/// `|Q(M)|` for every `M` in `[m_lo, m_hi]`, in index order. Windows are
/// counted in parallel; output is identical for any thread count.
pub fn count_series(
    m_lo: usize,
    m_hi: usize,
    convention: IntervalConvention,
    table: &PrimeTable,
) -> Result<Vec<SeriesPoint>> {
    check_m(m_lo)?;
    if m_hi < m_lo {
        return Err(Error::Domain(format!("empty M range [{m_lo}, {m_hi}]")));
    }
    let p_lo = table.nth(m_lo)?;
    let p_hi = table.nth(m_hi)?;
    let lowers = TwinLowers::scan(table, p_lo, 2 * p_hi);
    let primes = table.as_slice();
    Ok((m_lo..=m_hi)
        .into_par_iter()
        .map(|m| {
            let p_m = primes[m - 1];
            let (a, b) = convention.lower_range(p_m);
            SeriesPoint { m, p_m, count: lowers.count_in(a, b) }
        })
        .collect())
}

/// All `M <= m_hi` whose window is empty.
pub fn empty_window_scan(m_hi: usize, convention: IntervalConvention, table: &PrimeTable) -> Result<Vec<usize>> {
    Ok(count_series(2, m_hi, convention, table)?
        .into_iter()
        .filter(|s| s.count == 0)
        .map(|s| s.m)
        .collect())
}

/// Pseudo twin `(q_M, q_M + 2)` with its certification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PseudoTwinRecord {
    pub m: usize,
    pub p_m: u64,
    pub q_m: Option<u64>,
    /// `q_M <= 2 p_M`.
    pub in_interval: bool,
    /// Both `q_M` and `q_M + 2` are prime.
    pub certified_twin: bool,
    pub search_limit: u64,
}

pub fn pseudo_twin(m: usize, table: &PrimeTable, limit: SearchLimit) -> Result<PseudoTwinRecord> {
    check_m(m)?;
    let p_m = table.nth(m)?;
    let search_limit = limit.resolve(p_m);
    let q_m = q_min(m, table, limit)?;
    let (in_interval, certified_twin) = match q_m {
        Some(q) => (q <= 2 * p_m, is_prime(q) && is_prime(q + 2)),
        None => (false, false),
    };
    Ok(PseudoTwinRecord { m, p_m, q_m, in_interval, certified_twin, search_limit })
}

/// `x(M)`: twin pairs whose upper member lies in `(2 p_M, 2 p_{M+1}]`.
pub fn x_of(m: usize, table: &PrimeTable) -> Result<usize> {
    check_m(m)?;
    let p_m = table.nth(m)?;
    let p_next = table.nth(m + 1)?;
    let (a, b) = gain_range(p_m, p_next);
    Ok(TwinLowers::scan(table, a, b).0.len())
}

/// Lower members whose upper member lies in `(2 p_M, 2 p_{M+1}]`.
fn gain_range(p_m: u64, p_next: u64) -> (u64, u64) {
    (2 * p_m - 1, 2 * p_next - 2)
}

/// Three-way classification of a window transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Case1,
    Case2,
    Case3,
}

impl CaseLabel {
    /// Twin lost at the boundary and nothing gained, lost and some gained, or
    /// nothing lost.
    pub fn classify(boundary_twin: bool, gain: usize) -> Self {
        match (boundary_twin, gain) {
            (true, 0) => CaseLabel::Case1,
            (true, _) => CaseLabel::Case2,
            (false, _) => CaseLabel::Case3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Case1 => "case1",
            CaseLabel::Case2 => "case2",
            CaseLabel::Case3 => "case3",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "case1" => Ok(CaseLabel::Case1),
            "case2" => Ok(CaseLabel::Case2),
            "case3" => Ok(CaseLabel::Case3),
            other => Err(Error::Parse(format!("unknown case label `{other}`"))),
        }
    }
}

/// One `M -> M + 1` transition under the program convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecurrenceAudit {
    pub m: usize,
    pub p_m: u64,
    pub p_next: u64,
    pub count_m: usize,
    pub count_m1: usize,
    /// 1 iff `p_M` is the lower member of a twin pair (it leaves the window).
    pub loss: u8,
    /// `x(M)`.
    pub gain_x: usize,
    /// Keyed on the element actually lost, `q = p_M`.
    pub case_label: CaseLabel,
    /// Keyed on whether `(p_{M+1}, p_{M+1} + 2)` is a twin pair.
    pub next_prime_case_label: CaseLabel,
    /// `count_m1 == count_m - loss + gain_x`.
    pub identity_ok: bool,
    /// `count_m1 >= count_m - 1`.
    pub inequality_ok: bool,
}

impl RecurrenceAudit {
    pub fn delta(&self) -> i64 {
        self.count_m1 as i64 - self.count_m as i64
    }
}

/// Transitions `M -> M + 1` for `M` in `[m_lo, m_hi]`. Violations are reported
/// in the records, never dropped.
pub fn recurrence_audit(m_lo: usize, m_hi: usize, table: &PrimeTable) -> Result<Vec<RecurrenceAudit>> {
    check_m(m_lo)?;
    if m_hi < m_lo {
        return Err(Error::Domain(format!("empty M range [{m_lo}, {m_hi}]")));
    }
    let p_lo = table.nth(m_lo)?;
    let p_top = table.nth(m_hi + 1)?;
    let lowers = TwinLowers::scan(table, p_lo, 2 * p_top);
    let primes = table.as_slice();
    let conv = IntervalConvention::Program;
    Ok((m_lo..=m_hi)
        .into_par_iter()
        .map(|m| {
            let p_m = primes[m - 1];
            let p_next = primes[m];
            let (a, b) = conv.lower_range(p_m);
            let count_m = lowers.count_in(a, b);
            let (a, b) = conv.lower_range(p_next);
            let count_m1 = lowers.count_in(a, b);
            let lost = is_prime(p_m + 2);
            let (ga, gb) = gain_range(p_m, p_next);
            let gain_x = lowers.count_in(ga, gb);
            let loss = u8::from(lost);
            let identity_ok = count_m1 as i64 == count_m as i64 - i64::from(loss) + gain_x as i64;
            RecurrenceAudit {
                m,
                p_m,
                p_next,
                count_m,
                count_m1,
                loss,
                gain_x,
                case_label: CaseLabel::classify(lost, gain_x),
                next_prime_case_label: CaseLabel::classify(is_prime(p_next + 2), gain_x),
                identity_ok,
                inequality_ok: count_m1 + 1 >= count_m,
            }
        })
        .collect())
}

/// How a pair must sit inside `(x, 2x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Theorem6Reading {
    /// `x < q` and `q + 2 < 2x`.
    #[default]
    Open,
    /// `x < q < 2x`.
    LowerOnly,
}

impl Theorem6Reading {
    fn lower_range(self, x: u64) -> (u64, u64) {
        match self {
            Theorem6Reading::Open => (x + 1, (2 * x).saturating_sub(3)),
            Theorem6Reading::LowerOnly => (x + 1, 2 * x - 1),
        }
    }
}

/// Least twin pair inside `(x, 2x)`, or `None`.
pub fn theorem6_check(x: u64, table: &PrimeTable, reading: Theorem6Reading) -> Result<Option<TwinPair>> {
    Ok(theorem6_scan(x, x, table, reading)?.pop().and_then(|(_, p)| p))
}

/// [`theorem6_check`] for every integer `x` in `[x_lo, x_hi]`.
pub fn theorem6_scan(
    x_lo: u64,
    x_hi: u64,
    table: &PrimeTable,
    reading: Theorem6Reading,
) -> Result<Vec<(u64, Option<TwinPair>)>> {
    if x_lo < 2 || x_hi < x_lo {
        return Err(Error::Domain(format!("x range [{x_lo}, {x_hi}] must satisfy 2 <= lo <= hi")));
    }
    let lowers = TwinLowers::scan(table, x_lo + 1, 2 * x_hi);
    Ok((x_lo..=x_hi)
        .map(|x| {
            let (a, b) = reading.lower_range(x);
            (x, lowers.first_in(a, b).map(TwinPair::from_verified))
        })
        .collect())
}

/// Twin pairs with lower member in `[lo, hi]`, from a prime scan.
pub fn twins_between(table: &PrimeTable, lo: u64, hi: u64) -> Vec<TwinPair> {
    TwinLowers::scan(table, lo, hi)
        .slice_in(lo, hi)
        .iter()
        .map(|&q| TwinPair::from_verified(q))
        .collect()
}
