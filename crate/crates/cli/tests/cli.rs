use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symemb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write_input(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const RANK_ONE: &str = r#"{
  "root_datum": {"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]]},
  "satake": {"I_bullet": [], "tau": [1], "tau_X": [[1]]}MONOID
}"#;

#[test]
fn validate_reports_axioms() {
    let v = json(&["validate", "--space", "AI.sl.3"]);
    assert_eq!(v["axioms"], "ok");
    assert_eq!(v["space"], "AI.sl.3");
}

#[test]
fn canonical_adjoint_rank_two() {
    let v = json(&["canonical", "--space", "AI.ad.2"]);
    assert_eq!(v["orbits"], 4);
    assert_eq!(v["smooth"], true);
    let v = json(&["canonical", "--space", "AI.sl.3"]);
    assert_eq!(v["smooth"], false);
    assert_eq!(v["index"], 3);
}

#[test]
fn essential_pairs_text_summary() {
    let out = run(&["essential-pairs", "--space", "AI.sl.3", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().last(), Some("essential: 11 of 16"));
}

#[test]
fn bound_is_echoed() {
    let v = json(&["abelianization", "--space", "AI.sl.2", "--bound", "3"]);
    assert_eq!(v["bound"], 3);
    assert_eq!(v["very_flat"]["verdict"], true);
    assert_eq!(v["very_flat"]["exact"], true);
    assert_eq!(json(&["orbits", "--space", "AI.sl.2"])["bound"], 4);
}

#[test]
fn enveloping_cross_check() {
    let v = json(&["enveloping", "--space", "AI.sl.2"]);
    let cc = &v["cross_check"];
    assert_eq!(cc["all_agree"], true);
    assert_eq!(cc["essential"], 3);
    assert_eq!(cc["closed_prime_ideals"], 2);
}

#[test]
fn dot_output() {
    let out = run(&["canonical", "--space", "AI.sl.2", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph canonical {"));
    assert!(text.contains("n0 -> n1;"));
    let out = run(&["hilbert", "--space", "AI.sl.2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_files_and_monoids() {
    let good = write_input("good.json", &RANK_ONE.replace("MONOID", r#", "monoid": {"generators": [[2]]}"#));
    let v = json(&["validate", "--input", good.to_str().unwrap()]);
    assert_eq!(v["embedding"]["valid"], true);

    let bad = write_input("bad.json", &RANK_ONE.replace("MONOID", r#", "monoid": {"generators": [[4]]}"#));
    let out = run(&["validate", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["embedding"]["saturated"], false);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not saturated"));

    let v = json(&["hilbert", "--input", bad.to_str().unwrap()]);
    assert_eq!(v["hilbert_basis"], serde_json::json!([[2]]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["validate"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate", "--space", "AI.sl.2"]).status.code(), Some(1));
    assert_eq!(run(&["validate", "--space", "nowhere"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let broken = write_input("broken.json", &RANK_ONE.replace("MONOID", "").replace("\"tau_X\": [[1]]", "\"tau_X\": [[-1]]"));
    let out = run(&["validate", "--input", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let malformed = write_input("malformed.json", "{\"root_datum\": 3}");
    assert_eq!(run(&["validate", "--input", malformed.to_str().unwrap()]).status.code(), Some(2));
}
