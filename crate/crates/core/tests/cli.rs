use std::process::{Command, Output};

fn picard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_picard")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chartab_json() {
    let o = picard(&["chartab", "--family", "A5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["block_rows"], serde_json::json!([0, 1, 2, 4]));
    assert_eq!(v["table"]["characters"].as_array().unwrap().len(), 5);
}

#[test]
fn perf_text() {
    let o = picard(&["perf", "--family", "G(1)", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "order = 48"));
}

#[test]
fn verify_single_case() {
    let o = picard(&["verify", "--case", "thm-main-v,n=1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["reports"][0]["order"], 21);
    assert_eq!(v["reports"][0]["passed"], true);
}

#[test]
fn verify_all_small_caps() {
    let o = picard(&["verify", "--max-n", "1", "--max-p", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("all_passed = true"));
    assert!(text.contains("sl28_ingredients.hom_part_order = 3"));
}

#[test]
fn outgrp_to_file() {
    let dir = std::env::temp_dir().join(format!("picard-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let o = picard(&["outgrp", "--k", "2", "--n", "2", "--subgroup", "C3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["quotient_order"], 8);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let a = picard(&["verify", "--case", "thm-main-ii,n1=1,n2=1"]);
    let b = picard(&["verify", "--case", "thm-main-ii,n1=1,n2=1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["perf", "--family", "nonsense"][..],
        &["verify", "--case", "thm-main-i,P=1,n=3"],
        &["verify", "--case", "thm-main-ix,n=1"],
        &["outgrp", "--k", "2", "--n", "1", "--subgroup", "C5"],
        &["chartab"],
        &["bogus"],
    ] {
        let o = picard(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
