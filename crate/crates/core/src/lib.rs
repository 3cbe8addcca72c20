//! Derived-set sieve for twin primes.
//!
//! For each prime `p_n` the derived set `S_{p_n}` holds the odd `a > p_n` with
//! neither `a` nor `a + 2` divisible by `p_n`. This crate builds those sets by
//! predicate, computes the minima `q_M` of their cumulative intersections,
//! enumerates the twin pairs of the windows `[p_M, 2 p_M]`, audits how window
//! counts move from `M` to `M + 1`, and serializes everything to CSV, JSON and
//! plot data.
//!
//! Prime indices are 1-based: `p_1 = 2`.
//!
//! ```
//! use twinsieve::primes::PrimeTable;
//! use twinsieve::twin_analysis::{count_series, IntervalConvention};
//!
//! let table = PrimeTable::with_count(12).unwrap();
//! let counts: Vec<usize> = count_series(2, 10, IntervalConvention::Program, &table)
//!     .unwrap()
//!     .iter()
//!     .map(|p| p.count)
//!     .collect();
//! assert_eq!(counts, [1, 1, 1, 2, 1, 2, 1, 2, 2]);
//! ```

pub mod cli;
pub mod derived_sets;
pub mod error;
pub mod oracle;
pub mod primes;
pub mod report;
pub mod twin_analysis;

pub use error::{Error, Result};
pub use primes::{is_prime, PrimeTable};
pub use twin_analysis::{IntervalConvention, TwinPair};
