use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use longhole::graph::Graph;
use longhole::harness::{encode_graph6, RunReport, Verdict};

fn longhole(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_longhole")).args(args).output().unwrap()
}

fn write_g6(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    fs::write(&path, encode_graph6(g)).unwrap();
    path.to_str().unwrap().to_owned()
}

fn report(out: &Output) -> RunReport {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn pipeline_finds_six_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_g6(dir.path(), "c6.g6", &Graph::cycle(6));
    let r = report(&longhole(&["detect", "--l", "6", "--input", &input, "--engine", "pipeline", "--json"]));
    assert_eq!(r.verdict, Verdict::Yes);
    assert_eq!(r.stage.to_string(), "short-hole");
    assert_eq!(r.witness.unwrap().len(), 6);
}

#[test]
fn oracle_rejects_seven_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_g6(dir.path(), "c7.g6", &Graph::cycle(7));
    let r = report(&longhole(&["detect", "--l", "6", "--input", &input, "--engine", "oracle", "--json"]));
    assert_eq!(r.verdict, Verdict::No);
    assert_eq!(r.stage.to_string(), "none");
}

#[test]
fn json_field_names_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_g6(dir.path(), "c8.g6", &Graph::cycle(8));
    let out = longhole(&["detect", "--l", "6", "--input", &input, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["elapsed_ms", "ell", "engine", "fingerprint", "stage", "verdict", "witness"]);
}

#[test]
fn odd_l_rounds_up_and_four_uses_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let c8 = write_g6(dir.path(), "c8.g6", &Graph::cycle(8));
    let r = report(&longhole(&["detect", "--l", "7", "--input", &c8, "--json"]));
    assert_eq!((r.ell, r.verdict), (8, Verdict::Yes));
    let r = report(&longhole(&["detect", "--l", "9", "--input", &c8, "--json"]));
    assert_eq!((r.ell, r.verdict), (10, Verdict::No));
    let c4 = write_g6(dir.path(), "c4.g6", &Graph::cycle(4));
    let r = report(&longhole(&["detect", "--l", "4", "--input", &c4, "--json"]));
    assert_eq!((r.ell, r.verdict), (4, Verdict::Yes));
    assert_eq!(r.stage.to_string(), "exhaustive");
}

#[test]
fn edge_lists_are_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    fs::write(&path, "# path\n0 1\n\n1 2\n").unwrap();
    let r = report(&longhole(&["detect", "--l", "6", "--input", path.to_str().unwrap(), "--json"]));
    assert_eq!(r.verdict, Verdict::No);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loop.txt");
    fs::write(&path, "0 0\n").unwrap();
    assert_eq!(longhole(&["detect", "--l", "6", "--input", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(longhole(&["detect", "--bogus"]).status.code(), Some(2));
    assert_eq!(longhole(&["detect", "--l", "6", "--input", "/nonexistent.g6"]).status.code(), Some(2));
    let c6 = write_g6(dir.path(), "c6.g6", &Graph::cycle(6));
    assert_eq!(longhole(&["detect", "--l", "2", "--input", &c6]).status.code(), Some(2));
    assert_eq!(longhole(&["detect", "--l", "6", "--input", &c6, "--format", "edgelist"]).status.code(), Some(2));
}

#[test]
fn fuzz_reports_ten_agreements() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("run");
    let out = longhole(&[
        "fuzz", "--count", "10", "--n-min", "6", "--n-max", "10", "--p", "0.3", "--l", "6", "--seed", "1",
        "--timeout-ms", "10000", "--out", out_dir.to_str().unwrap(), "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["agreements"], 10);
    assert_eq!(v["decided"], 10);
    for f in ["counterexamples.g6", "manifest.json", "summary.json"] {
        assert!(out_dir.join(f).exists(), "{f}");
    }
    assert_eq!(fs::read_to_string(out_dir.join("counterexamples.g6")).unwrap(), "");
}

#[test]
fn empty_fuzz_succeeds() {
    let out = longhole(&["fuzz", "--count", "0", "--l", "6"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_is_deterministic_and_audit_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = longhole(&["gen", "--kind", "gnp", "--n", "14", "--p", "0.2", "--seed", "42"]);
    let b = longhole(&["gen", "--kind", "gnp", "--n", "14", "--p", "0.2", "--seed", "42"]);
    assert_eq!(a.stdout, b.stdout);
    let path = dir.path().join("hole.g6");
    let out = longhole(&[
        "gen", "--kind", "planted-hole", "--length", "14", "--noise-vertices", "2", "--seed", "3",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = longhole(&["audit", "--l", "6", "--input", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["findings"], serde_json::json!([]));
}
