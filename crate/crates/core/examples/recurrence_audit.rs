//! Check the step-to-step count identity and tally the case labels.
use std::collections::BTreeMap;
use twinsieve::twin_analysis::recurrence_audit;
use twinsieve::PrimeTable;

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::with_count(2001)?;
    let audit = recurrence_audit(2, 1999, &table)?;
    let bad = audit.iter().filter(|a| !a.identity_ok || !a.inequality_ok).count();
    let mut cases: BTreeMap<&str, usize> = BTreeMap::new();
    for a in &audit {
        *cases.entry(a.case_label.as_str()).or_default() += 1;
    }
    println!("{} steps, {bad} violations, cases {cases:?}", audit.len());
    for a in audit.iter().take(8) {
        println!(
            "M = {:>2}: {} -> {} (loss {}, gain {}, {})",
            a.m, a.count_m, a.count_m1, a.loss, a.gain_x, a.case_label.as_str()
        );
    }
    Ok(())
}
