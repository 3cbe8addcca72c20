use super::sieve::sieve_range;
use crate::error::{Error, Result};

/// Upper bound on memory a [`PrimeTable`] may claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemoryBudget {
    pub bytes: u64,
}

impl Default for MemoryBudget {
    fn default() -> Self {
        MemoryBudget { bytes: 1 << 30 }
    }
}

/// Immutable ascending table of all primes up to `limit`.
///
/// Index `n` (1-based) maps to `p_n`; index 1 is 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    primes: Vec<u64>,
    limit: u64,
}

/// Upper bound for `p_n`: `n (ln n + ln ln n)` holds for `n >= 6`.
fn nth_prime_upper_bound(n: usize) -> u64 {
    if n < 6 {
        return 13;
    }
    let n = n as f64;
    (n * (n.ln() + n.ln().ln())).ceil() as u64
}

/// Upper bound for `pi(x)` (Rosser-Schoenfeld).
fn prime_count_upper_bound(x: u64) -> u64 {
    if x < 17 {
        return 7;
    }
    let xf = x as f64;
    (1.25506 * xf / xf.ln()).ceil() as u64
}

impl PrimeTable {
    /// Table holding at least `min_count` primes and every prime `<= min_limit`.
    pub fn build(min_count: usize, min_limit: u64) -> Result<Self> {
        Self::build_with_budget(min_count, min_limit, MemoryBudget::default())
    }

    pub fn build_with_budget(min_count: usize, min_limit: u64, budget: MemoryBudget) -> Result<Self> {
        if min_count == 0 && min_limit < 2 {
            return Err(Error::Domain(
                "prime table needs min_count >= 1 or min_limit >= 2".into(),
            ));
        }
        let mut limit = min_limit.max(nth_prime_upper_bound(min_count)).max(2);
        loop {
            let needed = prime_count_upper_bound(limit).saturating_mul(8);
            if needed > budget.bytes {
                return Err(Error::ResourceBudget { needed, budget: budget.bytes });
            }
            let primes = sieve_range(0, limit);
            if primes.len() >= min_count {
                return Ok(PrimeTable { primes, limit });
            }
            limit = limit.saturating_mul(2);
        }
    }

    /// Table holding at least `n` primes.
    pub fn with_count(n: usize) -> Result<Self> {
        Self::build(n, 0)
    }

    /// Table holding every prime `<= limit`.
    pub fn up_to(limit: u64) -> Result<Self> {
        Self::build(0, limit)
    }

    /// `p_n`, 1-based.
    pub fn nth(&self, n: usize) -> Result<u64> {
        if n == 0 || n > self.primes.len() {
            return Err(Error::IndexOutOfRange { index: n, count: self.primes.len() });
        }
        Ok(self.primes[n - 1])
    }

    pub fn count(&self) -> usize {
        self.primes.len()
    }

    /// Every prime `<= limit` is present.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    /// Membership for `x <= limit`; `None` when `x` lies beyond the table.
    pub fn contains(&self, x: u64) -> Option<bool> {
        (x <= self.limit).then(|| self.primes.binary_search(&x).is_ok())
    }

    /// 1-based index `n` with `p_n = p`, if `p` is a tabulated prime.
    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok().map(|i| i + 1)
    }

    /// Primes in `[lo, hi]`. The part above `limit` is sieved on the fly.
    pub fn primes_in(&self, lo: u64, hi: u64) -> Vec<u64> {
        if lo > hi {
            return Vec::new();
        }
        let start = self.primes.partition_point(|&p| p < lo);
        let end = self.primes.partition_point(|&p| p <= hi);
        let mut out = self.primes[start..end.max(start)].to_vec();
        if hi > self.limit {
            out.extend(sieve_range(lo.max(self.limit + 1), hi));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_entries() {
        let t = PrimeTable::with_count(1).unwrap();
        assert_eq!(t.nth(1).unwrap(), 2);
        let t = PrimeTable::with_count(2).unwrap();
        assert_eq!(&t.as_slice()[..2], &[2, 3]);
        assert_eq!(t.nth(2).unwrap(), 3);
    }

    #[test]
    fn index_bounds() {
        let t = PrimeTable::with_count(400).unwrap();
        assert_eq!(t.nth(400).unwrap(), 2741);
        assert!(matches!(t.nth(0), Err(Error::IndexOutOfRange { .. })));
        let c = t.count();
        assert!(matches!(t.nth(c + 1), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(t.index_of(2741), Some(400));
        assert_eq!(t.index_of(2742), None);
    }

    #[test]
    fn p_2000() {
        let t = PrimeTable::with_count(2000).unwrap();
        assert_eq!(t.nth(2000).unwrap(), 17_389);
    }

    #[test]
    fn empty_request_is_rejected() {
        assert!(matches!(PrimeTable::build(0, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let tiny = MemoryBudget { bytes: 1024 };
        assert!(matches!(
            PrimeTable::build_with_budget(0, 1_000_000, tiny),
            Err(Error::ResourceBudget { .. })
        ));
    }

    #[test]
    fn primes_in_spans_table_edge() {
        let t = PrimeTable::up_to(100).unwrap();
        assert_eq!(t.primes_in(5, 10), vec![5, 7]);
        assert_eq!(t.primes_in(3, 6), vec![3, 5]);
        assert_eq!(t.primes_in(90, 130), vec![97, 101, 103, 107, 109, 113, 127]);
        assert_eq!(t.primes_in(200, 212), vec![211]);
        assert_eq!(t.contains(97), Some(true));
        assert_eq!(t.contains(99), Some(false));
        assert_eq!(t.contains(101), None);
    }
}
