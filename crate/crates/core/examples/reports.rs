//! Emit one count series as CSV, JSON, a plot table and an SVG file.
use twinsieve::report::{from_json, plot_series, plot_svg, to_csv, to_json, PlotAxis, ReportEnvelope};
use twinsieve::twin_analysis::count_series;
use twinsieve::{IntervalConvention, PrimeTable};

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::with_count(201)?;
    let series = count_series(2, 200, IntervalConvention::Program, &table)?;
    let env = ReportEnvelope::count_series(&series, IntervalConvention::Program);

    let csv = to_csv(&env);
    let json = to_json(&env);
    assert_eq!(from_json(&json)?, env);
    print!("{}", String::from_utf8_lossy(&csv).lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("\n... {} CSV bytes, {} JSON bytes", csv.len(), json.len());
    let plot = plot_series(&env, PlotAxis::Prime)?;
    println!("plot tail: {}", String::from_utf8_lossy(&plot).lines().last().unwrap_or(""));

    let path = std::env::temp_dir().join("twinsieve_counts.svg");
    std::fs::write(&path, plot_svg(&env, PlotAxis::Index)?)?;
    println!("wrote {}", path.display());
    Ok(())
}
