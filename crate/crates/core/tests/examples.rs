//! Runs each example's entry point so the examples stay working.

#[allow(dead_code)]
#[path = "../examples/cyclotomic_roots.rs"]
mod cyclotomic_roots;
#[allow(dead_code)]
#[path = "../examples/character_tables.rs"]
mod character_tables;
#[allow(dead_code)]
#[path = "../examples/perfect_isometries.rs"]
mod perfect_isometries;
#[allow(dead_code)]
#[path = "../examples/normalizers.rs"]
mod normalizers;
#[allow(dead_code)]
#[path = "../examples/sl28_ingredients.rs"]
mod sl28_ingredients;
#[allow(dead_code)]
#[path = "../examples/picard_groups.rs"]
mod picard_groups;

#[test]
fn cyclotomic_roots_runs() {
    cyclotomic_roots::run().unwrap();
}

#[test]
fn character_tables_runs() {
    character_tables::run().unwrap();
}

#[test]
fn perfect_isometries_runs() {
    perfect_isometries::run().unwrap();
}

#[test]
fn normalizers_runs() {
    normalizers::run().unwrap();
}

#[test]
fn sl28_ingredients_runs() {
    sl28_ingredients::run().unwrap();
}

#[test]
fn picard_groups_runs_quick_cases() {
    let cases = picard::picassembly::CaseSpec::all(1, 2);
    assert!(picard_groups::run(&cases).unwrap());
}
