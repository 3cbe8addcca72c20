//! Look for a twin pair strictly between x and 2x, under both readings.
use twinsieve::twin_analysis::{theorem6_check, theorem6_scan, Theorem6Reading};
use twinsieve::PrimeTable;

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::up_to(60_010)?;
    println!("x = 100: {:?}", theorem6_check(100, &table, Theorem6Reading::Open)?);
    for reading in [Theorem6Reading::Open, Theorem6Reading::LowerOnly] {
        let misses: Vec<u64> = theorem6_scan(2, 30_000, &table, reading)?
            .into_iter()
            .filter_map(|(x, hit)| hit.is_none().then_some(x))
            .collect();
        println!("{reading:?}: no pair for x in {misses:?}");
    }
    Ok(())
}
