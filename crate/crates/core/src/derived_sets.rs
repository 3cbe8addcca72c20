//! Derived sets `S_p = { a odd : a > p, p ∤ a, p ∤ a + 2 }`, their cumulative
//! intersections over `p_2..p_M`, the intersection minima `q_M`, the primorial
//! witness, and the windowed cumulative-intersection program.
//!
//! The sets are infinite; everything here is decided by predicate or over an
//! explicit finite window.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::primes::PrimeTable;

/// Default cap on `M` for [`primorial_witness`].
pub const DEFAULT_WITNESS_CAP: usize = 64;

/// Paper-run defaults for [`windowed_replication`].
pub const REPLICATION_N_MAX: usize = 400;
pub const REPLICATION_WINDOW: u64 = 3000;

/// The set `S_{p_n}` named by its position `n` in the prime sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedSetSpec {
    index: usize,
    p: u64,
}

impl DerivedSetSpec {
    pub fn new(index: usize, table: &PrimeTable) -> Result<Self> {
        Ok(DerivedSetSpec { index, p: table.nth(index)? })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn contains(&self, a: u64) -> bool {
        member_s(a, self)
    }
}

/// `a ∈ S_{p}`: odd, above `p`, and neither `a` nor `a + 2` divisible by `p`.
pub fn member_s(a: u64, spec: &DerivedSetSpec) -> bool {
    let p = spec.p;
    a % 2 == 1 && a > p && !a.is_multiple_of(p) && !(a % p + 2).is_multiple_of(p)
}

/// `a ∈ S_1`, the set of all odd naturals. Only the windowed program touches it.
pub fn member_s1(a: u64) -> bool {
    a % 2 == 1
}

/// `min S_p`: 3 for `p = 2`, otherwise `p + 2`.
pub fn min_s(spec: &DerivedSetSpec) -> u64 {
    if spec.p == 2 {
        3
    } else {
        spec.p + 2
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::Domain(format!("intersection index M must be >= 2, got {m}")));
    }
    Ok(())
}

/// `a ∈ S_{p_2} ∩ ... ∩ S_{p_M}`.
pub fn member_intersection(a: u64, m: usize, table: &PrimeTable) -> Result<bool> {
    check_m(m)?;
    let p_m = table.nth(m)?;
    if a.is_multiple_of(2) || a <= p_m {
        return Ok(false);
    }
    Ok(table.as_slice()[1..m].iter().all(|&p| !a.is_multiple_of(p) && !(a % p + 2).is_multiple_of(p)))
}

/// Upper end of the scan performed by [`q_min`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchLimit {
    /// `2 * p_M^2`.
    #[default]
    Auto,
    Fixed(u64),
}

impl SearchLimit {
    pub fn resolve(self, p_m: u64) -> u64 {
        match self {
            SearchLimit::Auto => p_m.saturating_mul(p_m).saturating_mul(2),
            SearchLimit::Fixed(v) => v,
        }
    }
}

/// Sieve the odd candidates `start, start + 2, ..., end` against the moduli and
/// return the first survivor.
fn first_survivor(start: u64, end: u64, moduli: &[u64]) -> Option<u64> {
    let slots = ((end - start) / 2 + 1) as usize;
    let mut bad = vec![false; slots];
    for &p in moduli {
        let s_mod = start % p;
        // a ≡ 0 and a ≡ -2 (mod p)
        for r in [0, p - 2] {
            let mut a = start + (r + p - s_mod) % p;
            if a.is_multiple_of(2) {
                a += p;
            }
            if a > end {
                continue;
            }
            let mut idx = ((a - start) / 2) as usize;
            while idx < slots {
                bad[idx] = true;
                idx += p as usize;
            }
        }
    }
    bad.iter().position(|&b| !b).map(|i| start + 2 * i as u64)
}

/// `q_M = min(S_{p_2} ∩ ... ∩ S_{p_M})`, searched up to `limit`.
///
/// `Ok(None)` means the limit was too small, not that the intersection is empty.
pub fn q_min(m: usize, table: &PrimeTable, limit: SearchLimit) -> Result<Option<u64>> {
    check_m(m)?;
    let p_m = table.nth(m)?;
    let limit = limit.resolve(p_m);
    if limit <= p_m {
        return Err(Error::Domain(format!("search limit {limit} must exceed p_M = {p_m}")));
    }
    let moduli = &table.as_slice()[1..m];
    let mut start = p_m + 2;
    let mut width: u64 = 1 << 10;
    while start <= limit {
        let end = start.saturating_add(2 * (width - 1)).min(limit);
        let end = if end % 2 == 0 { end - 1 } else { end };
        if end < start {
            break;
        }
        if let Some(a) = first_survivor(start, end, moduli) {
            return Ok(Some(a));
        }
        start = end + 2;
        width = (width * 2).min(1 << 16);
    }
    Ok(None)
}

/// One gcd row of the primorial witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub j: usize,
    pub p_j: u64,
    pub gcd_q_plus_2: u64,
    pub gcd_q_plus_4: u64,
}

/// `q = p_2 p_3 ... p_M` together with `gcd(q + 2, p_j)` and `gcd(q + 4, p_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecord {
    pub m: usize,
    pub q: BigUint,
    pub checks: Vec<WitnessCheck>,
}

impl WitnessRecord {
    /// Every check is 1, so `q + 2` lies in every `S_{p_j}`, `j = 2..M`.
    pub fn all_coprime(&self) -> bool {
        self.checks.iter().all(|c| c.gcd_q_plus_2 == 1 && c.gcd_q_plus_4 == 1)
    }

    pub fn q_is_odd(&self) -> bool {
        self.q.is_odd()
    }
}

pub fn primorial_witness(m: usize, table: &PrimeTable) -> Result<WitnessRecord> {
    primorial_witness_with_cap(m, table, DEFAULT_WITNESS_CAP)
}

pub fn primorial_witness_with_cap(m: usize, table: &PrimeTable, cap: usize) -> Result<WitnessRecord> {
    check_m(m)?;
    if m > cap {
        return Err(Error::WitnessCap { m, cap });
    }
    table.nth(m)?;
    let moduli = &table.as_slice()[1..m];
    let q: BigUint = moduli.iter().map(|&p| BigUint::from(p)).product();
    let q2 = &q + 2u32;
    let q4 = &q + 4u32;
    let to_u64 = |g: BigUint| -> u64 { g.try_into().expect("gcd with a u64 prime fits in u64") };
    let checks = moduli
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let bp = BigUint::from(p);
            WitnessCheck {
                j: i + 2,
                p_j: p,
                gcd_q_plus_2: to_u64(q2.gcd(&bp)),
                gcd_q_plus_4: to_u64(q4.gcd(&bp)),
            }
        })
        .collect();
    Ok(WitnessRecord { m, q, checks })
}

/// `min gp[n]` for one step of the windowed program.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowMinimum {
    pub n: usize,
    pub p_n: u64,
    pub min: u64,
}

/// Output of [`windowed_replication`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replication {
    pub n_max: usize,
    pub window: u64,
    /// One entry per `n = 2..=n_max`.
    pub minima: Vec<WindowMinimum>,
    /// Distinct `(min, min + 2)` pairs, ascending.
    pub pairs: Vec<(u64, u64)>,
}

/// `q[n]`: odd `m` in `(p_n, p_n + window]` with `p_n ∤ m` and `p_n ∤ m + 2`.
fn window_members(p: u64, window: u64) -> Vec<u64> {
    (p + 1..=p + window)
        .filter(|&m| member_s1(m) && m % p != 0 && (m + 2) % p != 0)
        .collect()
}

fn intersect_sorted(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Windowed cumulative intersection: `gp[1] = q[1]`, `gp[n] = gp[n-1] ∩ q[n]`,
/// reporting `(min gp[n], min gp[n] + 2)` for `n = 2..=n_max`.
pub fn windowed_replication(n_max: usize, window: u64, table: &PrimeTable) -> Result<Replication> {
    if n_max < 2 || window < 2 {
        return Err(Error::Domain(format!(
            "windowed replication needs n_max >= 2 and window >= 2, got {n_max}, {window}"
        )));
    }
    table.nth(n_max)?;
    let primes = table.as_slice();
    let mut gp = window_members(primes[0], window);
    let mut minima = Vec::with_capacity(n_max - 1);
    for n in 2..=n_max {
        let p_n = primes[n - 1];
        gp = intersect_sorted(&gp, &window_members(p_n, window));
        let &min = gp.first().ok_or(Error::EmptyIntersection { n })?;
        minima.push(WindowMinimum { n, p_n, min });
    }
    let mut pairs: Vec<(u64, u64)> = minima.iter().map(|w| (w.min, w.min + 2)).collect();
    pairs.sort_unstable();
    pairs.dedup();
    Ok(Replication { n_max, window, minima, pairs })
}
