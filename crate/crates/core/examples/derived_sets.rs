//! Membership in the derived sets and the minimum of their intersection.
use twinsieve::derived_sets::{member_intersection, min_s, q_min, DerivedSetSpec, SearchLimit};
use twinsieve::PrimeTable;

fn main() -> twinsieve::Result<()> {
    let table = PrimeTable::with_count(100)?;
    let s5 = DerivedSetSpec::new(3, &table)?;
    let members: Vec<u64> = (6..40).filter(|&a| s5.contains(a)).collect();
    println!("S_5 below 40: {members:?} (min {})", min_s(&s5));
    println!("is 29 in S_3 ∩ S_5 ∩ S_7? {}", member_intersection(29, 4, &table)?);
    for m in [2, 3, 5, 10, 25, 50, 100] {
        let q = q_min(m, &table, SearchLimit::Auto)?;
        println!("M = {m:>3}  p_M = {:>3}  q_M = {q:?}", table.nth(m)?);
    }
    Ok(())
}
