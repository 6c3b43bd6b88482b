use std::process::{Command, Output};

use maxclass3::report::{ClassifyDoc, VerifyDoc};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxclass3")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn aut_count_example() {
    let o = bin(&["aut-count", "--group", "5,1,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1458");
}

#[test]
fn eval_commutator() {
    let o = bin(&["eval", "--group", "5,1,0,0", "[s1,s]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(0,0,1,0,0)");
}

#[test]
fn order_and_comm() {
    let o = bin(&["order", "--group", "5,1,0,0", "s*s1"]);
    assert_eq!(stdout(&o).trim(), "9");
    let o = bin(&["order", "--group", "6,1,0,2", "s*s1"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = bin(&["comm", "--group", "5,1,0,0", "s1", "s2"]);
    assert_eq!(stdout(&o).trim(), "(0,0,0,0,1)");
}

#[test]
fn aut_check_verdicts() {
    let o = bin(&["aut-check", "--group", "6,1,0,0", "theta(2,0,2; 1; 1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle: automorphism"));
    let o = bin(&["--json", "aut-check", "--group", "5,1,0,1", "theta(2,1,1; 1; 1)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["congruence_valid"], false);
    assert_eq!(v["congruences"]["s_cube"], false);
    assert_eq!(v["consistent"], true);
}

#[test]
fn classify_json_round_trips() {
    let o = bin(&["classify", "--group", "6,1,0,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ClassifyDoc = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc.group, "B(6;1,0,2)");
    assert_eq!(doc.verdicts.len(), 3);
    let again = serde_json::to_string_pretty(&doc).unwrap();
    assert_eq!(again.trim(), stdout(&o).trim());
}

#[test]
fn classify_text() {
    let o = bin(&["classify", "--group", "5,1,0,1"]);
    assert!(stdout(&o).starts_with("B(5;1,0,1): resistant"));
    let o = bin(&["classify", "--group", "6,0,0,1"]);
    assert!(stdout(&o).contains("deferred"));
    assert!(stdout(&o).contains("candidates: none"));
}

#[test]
fn tables_render() {
    let o = bin(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("B(6;0,0,0)") && text.contains("B(5;1,0,2)"));
    let o = bin(&["--json", "tables", "--rank", "7"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["even_rank"], 8);
    assert_eq!(v["odd_rank"], 7);
}

#[test]
fn verify_all_rank6_exits_zero() {
    let o = bin(&["verify", "--suite", "all", "--rmax", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().ends_with("0 not passed"));
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["--json", "verify", "--suite", "core", "--suite", "aut", "--rmin", "6", "--rmax", "6", "--seed", "11"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.stdout, b.stdout);
    let doc: VerifyDoc = serde_json::from_slice(&a.stdout).unwrap();
    assert!(doc.passed);
    assert!(doc.failures.is_empty());
    assert!(doc.results.iter().all(|c| c.suite == "core" || c.suite == "aut"));
}

#[test]
fn usage_errors() {
    assert_eq!(bin(&["eval", "--group", "5,1,0", "s"]).status.code(), Some(1));
    assert_eq!(bin(&["eval", "--group", "5,1,0,0", "s*"]).status.code(), Some(1));
    assert_eq!(bin(&["classify", "--group", "5,0,2,0"]).status.code(), Some(1));
    assert_eq!(bin(&["verify", "--rmax", "4"]).status.code(), Some(1));
    assert_eq!(bin(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(bin(&["aut-check", "--group", "5,1,0,0", "theta(1,0,1; s; 1)"]).status.code(), Some(1));
}
