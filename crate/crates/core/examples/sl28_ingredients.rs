//! Character-level ingredients for the principal block of `Aut(SL_2(8))`.

use picard::picassembly::ingredient_report_for_sl28;

pub fn run() -> picard::Result<()> {
    let r = ingredient_report_for_sl28()?;
    println!("|Hom(C7:C3, C^×)| = {}", r.hom_part_order);
    println!("|N_GL3(2)(C7:C3) / C7:C3| = {}", r.normalizer_quotient_order);
    println!("degrees {:?}", r.degrees);
    for (j, p) in r.tensor_permutations.iter().enumerate() {
        println!("  tensor with λ{j}: {p:?}");
    }
    println!("fixed degrees {:?}, cycle type {:?}", r.fixed_degrees, r.cycle_type);
    println!("pairing invariants {:?}", r.pairing_invariants);
    println!("stable equivalence step checked: {}", r.stable_equivalence_checked);
    Ok(())
}

#[allow(dead_code)]
fn main() -> picard::Result<()> {
    run()
}
