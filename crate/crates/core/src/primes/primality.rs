use crate::error::{Error, Result};

/// Below this bound `is_prime` uses trial division.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 16;

/// The first twelve primes form a deterministic strong-probable-prime witness
/// set for every n < 3.3 * 10^24, which covers all of u64.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Strong probable-prime test of odd `n > 2` to base `a`.
fn is_sprp(n: u64, a: u64) -> bool {
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Exact primality for every `u64`.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if x == p {
            return true;
        }
        if x.is_multiple_of(p) {
            return false;
        }
    }
    // no factor up to 37, so anything below 41^2 is prime
    if x < 41 * 41 {
        return true;
    }
    if x < TRIAL_DIVISION_LIMIT {
        let mut d = 41;
        while d * d <= x {
            if x.is_multiple_of(d) {
                return false;
            }
            d += 2;
        }
        return true;
    }
    WITNESSES.iter().all(|&a| is_sprp(x, a))
}

/// Largest prime `<= x`, written `p(x)`. Requires `x >= 2`.
pub fn largest_prime_at_most(x: u64) -> Result<u64> {
    if x < 2 {
        return Err(Error::Domain(format!("largest_prime_at_most needs x >= 2, got {x}")));
    }
    let mut c = x;
    loop {
        if is_prime(c) {
            return Ok(c);
        }
        c -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(x: u64) -> bool {
        if x < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= x {
            if x.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn small_values() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(!is_prime(4));
        assert!(is_prime(2791));
        assert!(is_prime(2789));
    }

    #[test]
    fn odd_grid_matches_trial_division() {
        let mut x = 3;
        while x <= 100_000 {
            assert_eq!(is_prime(x), trial(x), "x = {x}");
            x += 2;
        }
    }

    #[test]
    fn sprp_region_against_trial_division() {
        for x in TRIAL_DIVISION_LIMIT - 500..TRIAL_DIVISION_LIMIT + 20_000 {
            assert_eq!(is_prime(x), trial(x), "x = {x}");
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // strong pseudoprimes to several small bases
        for n in [2047u64, 1_373_653, 25_326_001, 3_215_031_751, 2_152_302_898_747, 3_474_749_660_383, 341_550_071_728_321, 3_825_123_056_546_413_051] {
            assert!(!is_prime(n), "{n}");
        }
    }

    #[test]
    fn large_known_primes() {
        assert!(is_prime(18_446_744_073_709_551_557)); // largest 64-bit prime
        assert!(!is_prime(u64::MAX));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
    }

    #[test]
    fn largest_prime_at_most_examples() {
        assert_eq!(largest_prime_at_most(10).unwrap(), 7);
        assert_eq!(largest_prime_at_most(2).unwrap(), 2);
        assert_eq!(largest_prime_at_most(100).unwrap(), 97);
        assert!(matches!(largest_prime_at_most(1), Err(Error::Domain(_))));
    }

    #[test]
    fn bertrand_at_desk_scale() {
        for x in 2..=100_000u64 {
            let p = largest_prime_at_most(x).unwrap();
            assert!(p <= x && x < 2 * p, "x = {x}, p = {p}");
        }
    }
}
