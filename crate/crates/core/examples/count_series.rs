//! Count twin pairs in each window under both interval conventions.
use twinsieve::twin_analysis::{count_series, empty_window_scan, q_window};
use twinsieve::{IntervalConvention, PrimeTable};

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::with_count(2001)?;
    let w = q_window(10, IntervalConvention::Program, &table)?;
    let shown: Vec<String> = w.members.iter().map(ToString::to_string).collect();
    println!("Q(10), lower in [{}, {}]: {}", w.lo, w.hi, shown.join(" "));
    for conv in [IntervalConvention::Program, IntervalConvention::Strict] {
        let series = count_series(2, 2000, conv, &table)?;
        let max = series.iter().max_by_key(|s| s.count).unwrap();
        println!(
            "{conv}: max {} at M = {}, last {}, empty at {:?}",
            max.count,
            max.m,
            series.last().unwrap().count,
            empty_window_scan(2000, conv, &table)?
        );
    }
    Ok(())
}
