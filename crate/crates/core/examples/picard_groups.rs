//! Assembles Picard groups as groups of character permutations and checks
//! them against the claimed abstract types.
//!
//! `cargo run --release --example picard_groups` runs every supported case;
//! pass `quick` to restrict to `n = 1` and `|P| <= 2`.

use std::time::Instant;

use picard::picassembly::{verify_case, CaseSpec};

pub fn run(cases: &[CaseSpec]) -> picard::Result<bool> {
    let mut ok = true;
    for case in cases {
        let start = Instant::now();
        let r = verify_case(case)?;
        println!(
            "{:<26} |Pic| {:>5} claimed {:>5} {:<40} image {:>3}/{:<3} {} [{:.2}s]",
            r.case,
            r.order,
            r.claimed_order,
            r.claimed_type,
            r.sequence_accounting.image_order,
            r.sequence_accounting.out_dff_order,
            if r.passed { "pass" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for f in &r.failures {
            println!("    failed: {f}");
        }
        ok &= r.passed;
    }
    Ok(ok)
}

#[allow(dead_code)]
fn main() -> picard::Result<()> {
    let quick = std::env::args().any(|a| a == "quick");
    let cases = if quick { CaseSpec::all(1, 2) } else { CaseSpec::all(2, 4) };
    if !run(&cases)? {
        std::process::exit(1);
    }
    Ok(())
}
