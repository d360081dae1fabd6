use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chemgraph"))
        .args(args)
        .env("CHEMGRAPH_WORKERS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn family_json() {
    assert_eq!(stdout(&["family", "--id", "F2", "--n", "9", "--m", "11", "--format", "json"]), "[[0,0,4,2,5]]\n");
}

#[test]
fn family_matches_library_serialization() {
    let lib = chemgraph::family_censuses(chemgraph::FamilyId::F5, 10, 12).to_json();
    assert_eq!(stdout(&["family", "--id", "F5", "--n", "10", "--m", "12"]), lib + "\n");
}

#[test]
fn enumerate_count() {
    assert_eq!(stdout(&["enumerate", "--order", "6", "--count"]), "29\n");
    assert_eq!(stdout(&["enumerate", "--n", "5", "--count"]), "10\n");
    let lines = stdout(&["enumerate", "--order", "4"]);
    assert_eq!(lines.lines().count(), 6);
    assert!(lines.lines().any(|l| l == "C~"));
}

#[test]
fn classify_randic_text() {
    let text = stdout(&["classify", "--index", "Randic"]);
    let max = text.lines().find(|l| l.starts_with("max")).unwrap();
    let min = text.lines().find(|l| l.starts_with("min")).unwrap();
    assert!(max.split_whitespace().nth(1) == Some("F2"), "{text}");
    assert!(min.split_whitespace().nth(1) == Some("F1"), "{text}");
}

#[test]
fn classify_custom_coefficients() {
    // Zagreb2 written out: c_ij = ij
    let json = stdout(&["classify", "--coeffs", "2,3,4,6,9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["max"]["verdict"]["Family"]["Family"], "F3");
    assert_eq!(v["min"]["verdict"]["Family"]["Family"], "F4");
}

#[test]
fn eval_and_census() {
    assert_eq!(stdout(&["eval", "--index", "Zagreb1", "--census", "2,0,4,0,0"]), "22\n");
    let text = stdout(&["census", "--graph6", "FhCGG"]);
    assert!(text.contains("(2,0,4,0,0)"), "{text}");
    assert!(text.contains("realizable  true"), "{text}");
}

#[test]
fn realize_and_construct() {
    let g6 = stdout(&["realize", "--census", "2,0,4,0,0"]);
    let g = chemgraph::parse_graph6(g6.trim()).unwrap();
    assert_eq!(g.edge_census().unwrap(), chemgraph::EdgeCensus::new(2, 0, 4, 0, 0));
    assert_eq!(stdout(&["realize", "--census", "0,0,5,2,2"]), "none\n");
    let g6 = stdout(&["construct", "--n", "8", "--m", "9"]);
    let g = chemgraph::parse_graph6(g6.trim()).unwrap();
    assert_eq!(g.edge_census().unwrap(), chemgraph::EdgeCensus::new(0, 3, 0, 0, 6));
}

#[test]
fn extremal_json() {
    let json = stdout(&["extremal", "--index", "Randic", "--n", "7", "--m", "6", "--direction", "max"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["optimal_censuses"][0]["census"], serde_json::json!([2, 0, 4, 0, 0]));
    assert!((v["optimum"].as_f64().unwrap() - (2f64.sqrt() + 2.0)).abs() < 1e-12);
}

#[test]
fn verify_all_builtins_exits_zero() {
    let out = run(&["verify", "--all-builtins", "--n-max", "9"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn atlas_csv() {
    let csv = stdout(&["atlas", "--id", "F2", "--n-min", "7", "--n-max", "8"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("family,n,m,x12,x13,x22,x23,x33,witness_graph6"));
    assert!(lines.all(|l| l.starts_with("F2,") && !l.ends_with(',')));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("chemgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    stdout(&["family", "--id", "F9", "--n", "10", "--m", "9", "--output", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "[[0,5,0,4,0]]\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["classify", "--index", "NoSuchIndex"]).status.code(), Some(2));
    assert_eq!(run(&["family", "--id", "F13", "--n", "9", "--m", "11"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--n", "9", "--m", "10"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n-max", "9"]).status.code(), Some(2));
    assert_eq!(run(&["family", "--id", "F2", "--n", "9", "--m", "11", "--format", "graph6"]).status.code(), Some(2));
}

#[test]
fn indices_lists_all_builtins() {
    let text = stdout(&["indices"]);
    assert_eq!(text.lines().count(), 33);
    assert!(text.contains("Albertson"));
}
