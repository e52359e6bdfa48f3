//! Perfectness of signed bijections and enumeration of perfect
//! self-isometry groups.

use picard::chartab::block_data;
use picard::groups::SignedPerm;
use picard::isometry::{group_report, is_perfect, perf_enumerate, perf_exhaustive, SignedBijection};

pub fn run() -> picard::Result<()> {
    let a4 = block_data(&"G(1)".parse()?)?;
    // the degree-3 character is last; swap it with the trivial character
    let swaps = [
        ("identity", SignedPerm::identity(4)),
        ("(14) with signs (-,+,+,-)", SignedPerm::new(vec![3, 1, 2, 0], vec![-1, 1, 1, -1])?),
        ("(14) all positive", SignedPerm::from_perm(vec![3, 1, 2, 0])?),
    ];
    for (name, p) in swaps {
        let v = is_perfect(&SignedBijection::new(&a4, &a4, p)?)?;
        println!("{name}: perfect = {}, diagnostic = {:?}", v.perfect, v.diagnostic);
    }
    for family in ["G(1)", "P(1)", "P(2)", "P(1,1)", "P(1)xG(1)"] {
        let b = block_data(&family.parse()?)?;
        let e = perf_enumerate(&b)?;
        let r = group_report(&b.name, &e.group, Some(e.stats))?;
        println!(
            "Perf({family}): order {}, type {:?}, stats {:?}",
            r.order, r.matched_iso_type, r.stats
        );
    }
    let oracle = perf_exhaustive(&a4)?;
    println!("unpruned oracle on G(1): order {}", oracle.order());
    Ok(())
}

#[allow(dead_code)]
fn main() -> picard::Result<()> {
    run()
}
