//! Odd-order subgroups of `GL_k(Z/2^n)`, their normalizers, and the
//! comparison with brute-force outer automorphism groups.

use picard::groups::{AutomorphismGroup, FiniteGroup};
use picard::matring::{normalizer_report, subgroup_conjugacy_count, NormalizerMethod, OddShape};

pub fn run() -> picard::Result<()> {
    for (k, n, shape) in [
        (2, 1, OddShape::C3),
        (2, 2, OddShape::C3),
        (2, 3, OddShape::C3),
        (3, 1, OddShape::C7),
        (3, 2, OddShape::C7),
        (3, 1, OddShape::F21),
        (3, 2, OddShape::F21),
    ] {
        let r = normalizer_report(k, n, shape, NormalizerMethod::Auto)?;
        println!(
            "N_GL{k}(Z/{})({}) : order {}, quotient order {}",
            1u32 << n,
            r.subgroup,
            r.normalizer_order,
            r.quotient_order
        );
    }
    println!(
        "classes of C7:C3 in GL3(2): {}",
        subgroup_conjugacy_count(OddShape::F21, 3, 1)?
    );
    for family in ["G(1)", "G(2)", "E8:C7", "E8:F21"] {
        let g = FiniteGroup::build(&family.parse()?)?;
        let aut = AutomorphismGroup::compute(&g.table_group()?)?;
        let rep = aut.report(g.order())?;
        println!("|Out({family})| = {} by brute force", rep.out_order);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> picard::Result<()> {
    run()
}
