//! Exact arithmetic in `Q(ζ_N)` and the root-sum dichotomy: a sum of
//! `2^m` roots of unity of 2-power order lying in `2^m O` has all terms
//! equal or vanishes.

use picard::cyclo::{check_root_sum, in_2m_o, root_sum_scan, CycNum, RootSumVerdict};

pub fn run() -> picard::Result<()> {
    let w = CycNum::root(12, 3, 1)?;
    let w2 = CycNum::root(12, 3, 2)?;
    println!("ω + ω² = {}", (&w + &w2).to_rational().expect("rational"));
    let z8 = CycNum::root(8, 8, 1)?;
    let two_z = &CycNum::from_int(8, 2) * &z8;
    println!("2ζ8 in 2O: {}, in 4O: {}", in_2m_o(&two_z, 1), in_2m_o(&two_z, 2));
    assert_eq!(check_root_sum(2, 1, &[1, 3]), RootSumVerdict::SumZero);
    for n in 1..=3 {
        for m in 1..=2 {
            let (checked, bad) = root_sum_scan(n, m);
            println!("n = {n}, m = {m}: {checked} tuples, {} counterexamples", bad.len());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> picard::Result<()> {
    run()
}
