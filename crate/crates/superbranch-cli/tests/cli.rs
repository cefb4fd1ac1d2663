use std::fs;

use superbranch_cli::{cache_file_name, run};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("superbranch").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn restrict_worked_example() {
    let (code, out, _) = call(&["restrict", "--n", "6", "--partition", "1-4,2-6,3-5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{1-4,2-3,3-5}\tt*q\n{1-4,2-5}\tt^2*q\n{1-4,3-5}\tt*q\n");
}

#[test]
fn restrict_trivial_and_evaluated() {
    assert_eq!(call(&["restrict", "--n", "6", "--partition", ""]).1, "∅\t1\n");
    let (_, out, _) = call(&["restrict", "--n", "6", "--partition", "1-4,2-6,3-5", "--q", "3"]);
    assert_eq!(out, "{1-4,2-3,3-5}\t6\n{1-4,2-5}\t12\n{1-4,3-5}\t6\n");
}

#[test]
fn json_restrict() {
    let (code, out, _) = call(&["restrict", "--n", "4", "--partition", "1-4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["terms"][0]["partition"], "");
    assert_eq!(v["terms"][0]["coeff"], "t");
}

#[test]
fn induce_trivial() {
    let (code, out, _) = call(&["induce", "--n", "3", "--partition", ""]);
    assert_eq!(code, 0);
    assert_eq!(out, "∅\t1\n{1-3}\t1\n{2-3}\t1\n");
}

#[test]
fn shells_and_tensor() {
    let (code, out, _) = call(&["shells", "--n", "6", "--partition", "1-4,3-5", "--anchor", "2-6"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    let (code, out, _) = call(&["tensor", "--n", "6", "--partition", "1-4,3-5", "--arc", "2-6"]);
    assert_eq!(code, 0);
    assert!(out.contains("{1-4,2-5}\tt^2*q"));
}

#[test]
fn domain_errors_exit_one() {
    let (code, out, err) = call(&["restrict", "--n", "3", "--partition", "1-5"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error:"));
    assert_eq!(call(&["restrict", "--n", "4", "--partition", "1-x"]).0, 1);
    assert_eq!(call(&["restrict", "--bogus"]).0, 1);
    assert_eq!(call(&["verify", "--n", "6"]).0, 1);
    assert_eq!(call(&["tableaux", "--n", "3", "--k", "1", "--shape", "", "--semi-strict"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn verify_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let (code, out, _) = call(&["verify", "--suite", "all", "--n", "4", "--q", "2", "--report", report.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("PASS suite=all n=4 q=2"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn paths_with_weights() {
    let (code, out, _) = call(&["paths", "--n", "3", "--k", "2", "--shape", "1-3", "--weights"]);
    assert_eq!(code, 0);
    assert!(out.contains("(∅, ∅, {1-3}, {1-2}, {1-3})\tt^2\n"));
    assert!(out.ends_with("paths=4 multiplicity=q^2\n"));
}

#[test]
fn tableaux_listing() {
    let (code, out, _) = call(&["tableaux", "--n", "6", "--k", "4", "--shape", "1-4,2-3,3-5"]);
    assert_eq!(code, 0);
    assert!(out.contains("({(1⌢6;1) (1⌣4;2)}, {(2⌢6;3) (2⌣5;4) (3⌢5;6)}, {(2⌢6;5) (2⌣3;7)}, {(6,6;8)})\n"));
    let (code, out, _) =
        call(&["tableaux", "--n", "3", "--k", "1", "--shape", "1-3", "--format", "json", "--semi-strict", "--q", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0][0][0], serde_json::json!({"i": 1, "l": 3, "label": 1, "orient": "frown"}));
}

#[test]
fn output_is_deterministic_and_cache_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let plain = call(&["bratteli", "--n", "3", "--k", "2"]);
    let miss = call(&["bratteli", "--n", "3", "--k", "2", "--cache-dir", cache]);
    assert!(dir.path().join(cache_file_name(3, 2)).exists());
    let hit = call(&["bratteli", "--n", "3", "--k", "2", "--cache-dir", cache]);
    assert_eq!(plain, miss);
    assert_eq!(miss, hit);
    assert_eq!(call(&["paths", "--n", "3", "--k", "2", "--shape", "", "--cache-dir", cache]), call(&["paths", "--n", "3", "--k", "2", "--shape", ""]));
}

#[test]
fn bratteli_files() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("d.dot");
    let json = dir.path().join("d.json");
    let (code, out, _) = call(&["bratteli", "--n", "3", "--k", "1", "--dot", dot.to_str().unwrap(), "--json", json.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("n=3 k=1 vertices=5 edges=4\n"));
    assert!(fs::read_to_string(dot).unwrap().starts_with("digraph"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
}
