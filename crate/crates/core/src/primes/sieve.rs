//! Segmented Eratosthenes sieve over odd numbers, one bit per odd slot.
//!
//! A segment covers `SEGMENT_ODD_SLOTS` consecutive odd numbers. Segments are
//! independent given the base primes, so they are sieved in parallel and
//! concatenated in ascending order.

use rayon::prelude::*;

/// Default segment width in odd slots (2^16 odd numbers = 2^17 integers).
pub const SEGMENT_ODD_SLOTS: usize = 1 << 16;

/// Integer square root, exact for all `u64`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Odd primes `<= limit` from a plain byte sieve. Only used for base primes,
/// so `limit` is at most about 2^32.
fn odd_base_primes(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let limit = limit as usize;
    // slot i <-> 2i + 1
    let slots = (limit - 1) / 2 + 1;
    let mut composite = vec![false; slots];
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p - 1) / 2;
            while j < slots {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    (1..slots)
        .filter(|&i| !composite[i])
        .map(|i| (2 * i + 1) as u64)
        .collect()
}

/// Sieve the odd numbers `start, start + 2, ..., end` (both odd, inclusive).
fn sieve_segment(start: u64, end: u64, base: &[u64]) -> Vec<u64> {
    let slots = ((end - start) / 2 + 1) as usize;
    let mut bits = vec![0u64; slots.div_ceil(64)];
    for &p in base {
        let Some(sq) = p.checked_mul(p) else { break };
        if sq > end {
            break;
        }
        let mut m = if sq >= start { sq } else { start.div_ceil(p) * p };
        if m % 2 == 0 {
            m += p;
        }
        if m > end {
            continue;
        }
        let mut idx = ((m - start) / 2) as usize;
        let step = p as usize;
        while idx < slots {
            bits[idx / 64] |= 1 << (idx % 64);
            idx += step;
        }
    }
    let mut out = Vec::with_capacity(slots / 8);
    for (w, &word) in bits.iter().enumerate() {
        let mut free = !word;
        while free != 0 {
            let b = free.trailing_zeros() as usize;
            free &= free - 1;
            let idx = w * 64 + b;
            if idx >= slots {
                break;
            }
            let v = start + 2 * idx as u64;
            if v != 1 {
                out.push(v);
            }
        }
    }
    out
}

/// All primes `p` with `lo <= p <= hi`, ascending.
pub fn sieve_range(lo: u64, hi: u64) -> Vec<u64> {
    sieve_range_with(lo, hi, SEGMENT_ODD_SLOTS)
}

/// [`sieve_range`] with an explicit segment width (in odd slots).
pub fn sieve_range_with(lo: u64, hi: u64, segment_slots: usize) -> Vec<u64> {
    assert!(segment_slots > 0, "segment width must be positive");
    let mut out = Vec::new();
    if hi < 2 || lo > hi {
        return out;
    }
    if lo <= 2 {
        out.push(2);
    }
    let first = if lo <= 3 { 3 } else { lo | 1 };
    let last = if hi.is_multiple_of(2) { hi - 1 } else { hi };
    if first > last {
        return out;
    }
    let base = odd_base_primes(isqrt(last));
    let span = 2 * segment_slots as u64;
    let n_segments = (last - first) / span + 1;
    let parts: Vec<Vec<u64>> = (0..n_segments)
        .into_par_iter()
        .map(|k| {
            let s = first + k * span;
            let e = s.saturating_add(span - 2).min(last);
            sieve_segment(s, e, &base)
        })
        .collect();
    out.reserve(parts.iter().map(Vec::len).sum());
    for part in parts {
        out.extend(part);
    }
    out
}
