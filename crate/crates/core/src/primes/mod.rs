//! Prime generation, indexing and exact primality over 64-bit ranges.
//!
//! Indexing is 1-based throughout: `p_1 = 2`, `p_2 = 3`, and so on.

mod primality;
mod sieve;
mod table;

pub use primality::{is_prime, largest_prime_at_most};
pub use sieve::{isqrt, sieve_range, sieve_range_with, SEGMENT_ODD_SLOTS};
pub use table::{MemoryBudget, PrimeTable};
