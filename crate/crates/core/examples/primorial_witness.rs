//! The primorial product q and its gcd checks at q + 2 and q + 4.
use twinsieve::derived_sets::primorial_witness;
use twinsieve::PrimeTable;

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::with_count(30)?;
    for m in [2, 5, 10, 25] {
        let w = primorial_witness(m, &table)?;
        println!("M = {m:>2}: q = {} odd={} coprime={}", w.q, w.q_is_odd(), w.all_coprime());
    }
    Ok(())
}
