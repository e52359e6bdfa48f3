//! Character tables built by Clifford theory, principal blocks and their
//! decomposition matrices.

use picard::chartab::{block_data, CharacterTable};

pub fn run() -> picard::Result<()> {
    for family in ["G(1)", "A5", "E8:F21", "P(1)xG(1)", "B(3)"] {
        let t = CharacterTable::for_family(&family.parse()?)?;
        t.check_orthogonality()?;
        println!("{family}: |G| = {}, {} classes, degrees {:?}", t.group_order, t.len(), t.degrees());
    }
    let a4 = CharacterTable::for_family(&"G(1)".parse()?)?;
    println!("G(1) values as power-basis coordinates in Q(ζ_{}):", a4.conductor);
    for (label, row) in a4.labels.iter().zip(&a4.int_values) {
        let vals: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
        println!("  {label:<14} {}", vals.join(" "));
    }
    for family in ["G(1)", "A5", "G(1)xA5", "AutSL28"] {
        let b = block_data(&family.parse()?)?;
        b.check_invariants()?;
        println!("{}: degrees {:?}", b.name, b.degrees);
        for (label, row) in b.labels.iter().zip(&b.decomposition) {
            println!("  {label:<24} {row:?}");
        }
    }
    let b = block_data(&"G(2)xA5".parse()?)?;
    let pairing: Vec<i64> = (0..b.len()).map(|a| b.pairing_invariant(a)).collect();
    println!("pairing invariants of {}: {pairing:?}", b.name);
    Ok(())
}

#[allow(dead_code)]
fn main() -> picard::Result<()> {
    run()
}
