//! Compare the fast paths against the slow reference implementations.
use twinsieve::derived_sets::{q_min, SearchLimit};
use twinsieve::oracle;
use twinsieve::twin_analysis::q_window;
use twinsieve::{IntervalConvention, PrimeTable};

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::with_count(300)?;
    let mut mismatches = 0;
    for m in 2..=300 {
        let fast = q_min(m, &table, SearchLimit::Auto)?.unwrap();
        let count = q_window(m, IntervalConvention::Program, &table)?.cardinality();
        let p_m = table.nth(m)?;
        if fast != oracle::naive_q_min(m)? || count != oracle::naive_window_count(p_m) {
            mismatches += 1;
            println!("mismatch at M = {m}");
        }
    }
    println!("checked M = 2..=300, {mismatches} mismatches");
    Ok(())
}
