//! Windowed replication of the intersection minima up to n = 400.
use twinsieve::derived_sets::{windowed_replication, REPLICATION_N_MAX, REPLICATION_WINDOW};
use twinsieve::report::pair_list_text;
use twinsieve::PrimeTable;

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::with_count(REPLICATION_N_MAX)?;
    let rep = windowed_replication(REPLICATION_N_MAX, REPLICATION_WINDOW, &table)?;
    println!("{} distinct pairs", rep.pairs.len());
    print!("{}", pair_list_text(&rep.pairs));
    Ok(())
}
