use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_starpres"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("starpres-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn invariant_count(report: &Value, index: u64, inv: &str) -> u64 {
    report["indices"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["index"] == index)
        .and_then(|e| e["invariants"][inv].as_u64())
        .unwrap_or(0)
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["family", "banana"]).status.code(), Some(2));
    assert_eq!(run(&["invariants", "--group", "13"]).status.code(), Some(2));
    assert_eq!(run(&["stargraph", "xq"]).status.code(), Some(2));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn enumerate_modes_write_identical_files() {
    let (a, b) = (scratch("proxy.txt"), scratch("exact.txt"));
    let out = run(&["enumerate", "--mode", "proxy", "-o", a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["enumerate", "--mode", "exact", "-o", b.to_str().unwrap()]).status.code(), Some(0));
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().count(), 32);
}

#[test]
fn manifests_are_deterministic() {
    let (m1, m2) = (scratch("m1.json"), scratch("m2.json"));
    for m in [&m1, &m2] {
        let out = run(&["--manifest", m.to_str().unwrap(), "family", "4", "--alpha", "2"]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read_to_string(&m1).unwrap();
    assert_eq!(a, std::fs::read_to_string(&m2).unwrap());
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["command"], "family");
    assert_eq!(v["parameters"]["family"]["n"], 4);
    assert_eq!(v["digests"]["stdout"].as_str().unwrap().len(), 64);
}

#[test]
fn classify_builtin_and_stdin() {
    let out = run(&["--json", "classify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let mut sizes: Vec<usize> = v["classes"].as_array().unwrap().iter().map(|c| c["members"].as_array().unwrap().len()).collect();
    sizes.sort();
    assert_eq!(sizes, [2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 6, 6]);

    let out = run_stdin(&["classify", "-"], "x^2 y^2 z^2 x z y\n\nxxyxzyyzz\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("classes: 1"));
}

#[test]
fn duplicate_input_names_its_line() {
    let out = run_stdin(&["classify", "-"], "xxyyzzxzy\nxxyxzyyzz\nxxyyzzxzy\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn table_check_reports_failures() {
    let out = run(&["classify", "--check-table"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches("FAIL").count(), 3);
}

#[test]
fn invariants_of_builtin_groups() {
    let out = run(&["--json", "invariants", "-g", "1", "--max-index", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(invariant_count(&json(&out), 3, "Z^4 + Z_9"), 3);

    let out = run(&["--json", "invariants", "-g", "5", "--max-index", "4"]);
    assert_eq!(invariant_count(&json(&out), 4, "Z^5 + Z_5"), 1);

    let out = run(&["--json", "invariants", "-r", "x^2 y^2 z^2 x z y", "--max-index", "3", "--mode", "conjugacy-classes"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn free_group_counts() {
    let out = run(&["--json", "invariants", "--rank", "2", "--max-index", "3"]);
    let v = json(&out);
    // Index-k subgroups of a free group have rank k(r-1)+1.
    assert_eq!(invariant_count(&v, 2, "Z^3"), 3);
    assert_eq!(invariant_count(&v, 3, "Z^4"), 13);
}

#[test]
fn separation_exit_codes() {
    let out = run(&["separate", "--max-index", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("unseparated"));

    let out = run(&["--json", "separate", "--groups", "11,12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pairs"][0]["witness"]["invariant"], "Z^4 + Z_7");
    assert_eq!(v["pairs"][0]["witness"]["index"], 3);
}

#[test]
fn resource_limits_exit_3() {
    assert_eq!(run(&["invariants", "-g", "1", "--max-index", "7"]).status.code(), Some(3));
    assert_eq!(run(&["separate", "--max-index", "9", "--index-bound", "8"]).status.code(), Some(3));
    assert_eq!(run(&["family", "100"]).status.code(), Some(3));
}

#[test]
fn stargraph_input() {
    let out = run(&["stargraph", "xy", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("x - Y  1"));
    assert!(text.contains("special: no"));

    let out = run(&["--json", "stargraph", "x^2 y^2 z^2 x z y"]);
    let v = json(&out);
    assert_eq!(v["certificate"]["k"], 9);

    let path = scratch("rels.txt");
    std::fs::write(&path, "x1 x2 x2 x1\n").unwrap();
    let out = run(&["stargraph", "--rank", "2", "-f", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["stargraph", "-f", "/nonexistent/rels.txt"]).status.code(), Some(1));
}
