//! Brute-force references for cross-checking the optimized paths.
//!
//! Nothing here calls into `primes`, `derived_sets` or `twin_analysis`: every
//! answer comes from trial division with its own arithmetic.

use crate::error::{Error, Result};

/// Largest input accepted by [`naive_is_prime`].
pub const NAIVE_PRIME_BOUND: u64 = 1_000_000_000_000;

/// Largest `M` accepted by [`naive_q_min`].
pub const NAIVE_Q_MIN_MAX_M: usize = 2000;

/// Trial division by every integer `d` with `d * d <= x`.
pub fn naive_is_prime(x: u64) -> Result<bool> {
    if x > NAIVE_PRIME_BOUND {
        return Err(Error::OracleBound { value: x, bound: NAIVE_PRIME_BOUND });
    }
    Ok(trial_division(x))
}

fn trial_division(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Interval predicate for [`naive_twins_in`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bounds {
    /// `lo <= q` and `q + 2 <= hi`.
    BothInside,
    /// `lo <= q <= hi`.
    LowerOnly,
    /// `lo < q` and `q + 2 < hi`.
    Open,
}

/// Twin pairs `(q, q + 2)` inside `[lo, hi]` (or `(lo, hi)`) per `bounds`.
pub fn naive_twins_in(lo: u64, hi: u64, bounds: Bounds) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let start = lo.max(3);
    let mut q = if start.is_multiple_of(2) { start + 1 } else { start };
    while q <= hi {
        let inside = match bounds {
            Bounds::BothInside => lo <= q && q + 2 <= hi,
            Bounds::LowerOnly => lo <= q && q <= hi,
            Bounds::Open => lo < q && q + 2 < hi,
        };
        if inside && trial_division(q) && trial_division(q + 2) {
            out.push((q, q + 2));
        }
        q += 2;
    }
    out
}

/// The first `count` primes by trial division.
pub fn naive_first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut x = 2;
    while out.len() < count {
        if trial_division(x) {
            out.push(x);
        }
        x += 1;
    }
    out
}

/// Least odd `a > p_M` with neither `a` nor `a + 2` divisible by any of
/// `p_2..p_M`, by linear scan.
pub fn naive_q_min(m: usize) -> Result<u64> {
    if !(2..=NAIVE_Q_MIN_MAX_M).contains(&m) {
        return Err(Error::Domain(format!("naive_q_min needs 2 <= M <= {NAIVE_Q_MIN_MAX_M}, got {m}")));
    }
    Ok(naive_q_min_with(&naive_first_primes(m)))
}

/// [`naive_q_min`] with a precomputed `p_1..p_M` list (for sweeps).
pub fn naive_q_min_with(first_primes: &[u64]) -> u64 {
    let p_m = *first_primes.last().expect("nonempty prime list");
    let odd = &first_primes[1..];
    let mut a = p_m + 2;
    loop {
        if odd.iter().all(|&p| !a.is_multiple_of(p) && !(a + 2).is_multiple_of(p)) {
            return a;
        }
        a += 2;
    }
}

/// `|Q(M)|` under `[p_M, 2 p_M]` with both members inside (program convention).
pub fn naive_window_count(p_m: u64) -> usize {
    naive_twins_in(p_m, 2 * p_m, Bounds::BothInside).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_examples() {
        assert!(!naive_is_prime(1).unwrap());
        assert!(naive_is_prime(2789).unwrap());
        assert!(naive_is_prime(2).unwrap());
        assert!(!naive_is_prime(1_000_000).unwrap());
        assert!(matches!(naive_is_prime(NAIVE_PRIME_BOUND + 1), Err(Error::OracleBound { .. })));
    }

    #[test]
    fn twins_below_100() {
        assert_eq!(
            naive_twins_in(1, 100, Bounds::LowerOnly),
            vec![(3, 5), (5, 7), (11, 13), (17, 19), (29, 31), (41, 43), (59, 61), (71, 73)]
        );
        assert_eq!(naive_twins_in(1, 100, Bounds::BothInside).len(), 8);
    }

    #[test]
    fn twin_interval_variants() {
        assert_eq!(naive_twins_in(3, 6, Bounds::BothInside), vec![(3, 5)]);
        assert_eq!(naive_twins_in(5, 10, Bounds::BothInside), vec![(5, 7)]);
        assert!(naive_twins_in(5, 10, Bounds::Open).is_empty());
    }

    #[test]
    fn q_min_examples() {
        assert_eq!(naive_q_min(2).unwrap(), 5);
        assert_eq!(naive_q_min(3).unwrap(), 11);
        assert_eq!(naive_q_min(4).unwrap(), 11);
        assert!(naive_q_min(1).is_err());
        assert!(naive_q_min(2001).is_err());
    }

    #[test]
    fn first_primes() {
        let p = naive_first_primes(2000);
        assert_eq!(p[..5], [2, 3, 5, 7, 11]);
        assert_eq!(p[399], 2741);
        assert_eq!(p[1999], 17_389);
    }
}
