//! Build a prime table, index it, and probe primality past its limit.
use twinsieve::primes::{is_prime, largest_prime_at_most, PrimeTable};

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::with_count(2000)?;
    println!("p_1 = {}, p_400 = {}, p_2000 = {}", table.nth(1)?, table.nth(400)?, table.nth(2000)?);
    println!("index of 17389: {:?}", table.index_of(17389));
    println!("primes in [1_000_000, 1_000_100]: {:?}", table.primes_in(1_000_000, 1_000_100));
    let big = 1_000_000_000_000_000_003;
    println!("is_prime({big}) = {}", is_prime(big));
    println!("largest prime <= 10^18: {}", largest_prime_at_most(1_000_000_000_000_000_000)?);
    Ok(())
}
