use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liesolv")).args(args).output().unwrap()
}

fn run_env(args: &[&str], key: &str, val: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liesolv")).args(args).env(key, val).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn ex1_golden_prints_series_with_citation() {
    let o = run(&["examples", "EX1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("N_1: ⟨x2, x3, x4⟩"));
    assert!(s.contains("N_2: L"));
    assert!(s.contains("Γ_1: ⟨x3, x4⟩"));
    assert!(s.contains("Γ_2: 0"));
    assert!(s.contains("worked example EX1"));
}

#[test]
fn every_golden_carries_a_citation() {
    let o = run(&["examples", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["command"], "examples");
    let gs = v["results"].as_array().unwrap();
    assert_eq!(gs.len(), 5);
    for g in gs {
        assert!(!g["citation"].as_str().unwrap().is_empty());
        assert!(!g["claims"].as_array().unwrap().is_empty());
    }
}

#[test]
fn golden_mismatch_exits_two() {
    let o = run(&["examples", "X5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    let w = v["witnesses"].as_array().unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!(w[0]["claim"]["claim"], "M = ⟨d,x1,x2⟩ maximal");
}

#[test]
fn classify_ext3() {
    let o = run(&["classify", "--catalog", "EXT3", "--field", "F3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["results"]["extreme"], true);
    assert_eq!(v["results"]["minimal_non_n"]["flag"], false);
    let w = &v["witnesses"]["minimal_non_N"]["basis"];
    assert_eq!(w, &serde_json::json!([["1", "0", "0"], ["0", "0", "1"]]));
    let text = stdout(&run(&["classify", "--catalog", "EXT3"]));
    assert!(text.contains("minimal_non_N: false  witness ⟨x, z⟩ of length 2"));
}

#[test]
fn report_has_the_four_sections() {
    let v = json(&run(&["series", "--catalog", "T2", "--format", "json"]));
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["command", "config", "results", "witnesses"]);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "lemma-2.4", "--trials", "100", "--seed", "1", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let (mut va, mut vb) = (json(&a), json(&b));
    assert_eq!(va["results"][0]["totals"]["trials"], 100);
    va["results"][0]["elapsed_ms"] = 0.into();
    vb["results"][0]["elapsed_ms"] = 0.into();
    assert_eq!(va, vb);
}

#[test]
fn suite_failure_exits_two_with_witness() {
    let o = run(&["verify", "--suite", "thm-3.3", "--trials", "30", "--seed", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    let w = v["witnesses"].as_array().unwrap();
    assert!(!w.is_empty());
    assert!(w[0]["witness"]["algebra"]["brackets"].is_array());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["series"]).status.code(), Some(1));
    assert_eq!(run(&["series", "--catalog", "NOPE"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn file_round_trip_and_validation_errors() {
    let dir = tempfile::tempdir().unwrap();
    let ex1 = r#"{"field": "Q", "dim": 4, "labels": ["x1","x2","x3","x4"],
        "brackets": [{"i":1,"j":2,"coeffs":{"3":"1"}}, {"i":0,"j":1,"coeffs":{"2":"1"}},
                     {"i":0,"j":2,"coeffs":{"2":"1"}}, {"i":0,"j":3,"coeffs":{"3":"1"}}]}"#;
    let p = write(dir.path(), "ex1.json", ex1);
    let o = run(&["validate", &p, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let canon = json(&o)["results"]["canonical"].to_string();
    let q = write(dir.path(), "canon.json", &canon);
    let again = json(&run(&["validate", &q, "--format", "json"]))["results"]["canonical"].to_string();
    assert_eq!(canon, again);
    let golden = json(&run(&["validate", "--catalog", "EX1", "--format", "json"]));
    assert_eq!(golden["results"]["fingerprint"], json(&o)["results"]["fingerprint"]);

    let bad = write(dir.path(), "alt.json", r#"{"field": {"Fp": 3}, "dim": 2, "brackets": [{"i":0,"j":0,"coeffs":{"1":"1"}}]}"#);
    let o = run(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("alternating"), "{}", stderr(&o));

    let exp2 = r#"{"field": {"Fp": P}, "dim": 4, "brackets": [{"i":1,"j":3,"coeffs":{"0":"1"}},
        {"i":0,"j":2,"coeffs":{"0":"1"}}, {"i":1,"j":2,"coeffs":{"1":"1"}}]}"#;
    let ok = write(dir.path(), "exp2.json", &exp2.replace('P', "2"));
    assert_eq!(run(&["validate", &ok]).status.code(), Some(0));
    let four = write(dir.path(), "exp2_4.json", &exp2.replace('P', "4"));
    let o = run(&["validate", &four]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not a prime"), "{}", stderr(&o));

    let syntax = write(dir.path(), "syntax.json", "{\"field\": \"Q\",\n \"dim\": }");
    let o = run(&["validate", &syntax]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let jac = write(
        dir.path(),
        "jacobi.json",
        r#"{"field": "Q", "dim": 3, "brackets": [{"i":0,"j":1,"coeffs":{"1":"1"}}, {"i":0,"j":2,"coeffs":{"0":"1"}}, {"i":1,"j":2,"coeffs":{"2":"1"}}]}"#,
    );
    let o = run(&["validate", &jac]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Jacobi"), "{}", stderr(&o));
}

#[test]
fn search_uses_the_cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["search", "--predicate", "minimal-non-N", "--field", "F3", "--dims", "2-3", "--count", "2", "--format", "json"];
    let o = run_env(&args, "LIESOLV_CACHE_DIR", dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(dir.path().join("specimens-minimal-non-N.json").exists());
    let again = json(&run_env(&args, "LIESOLV_CACHE_DIR", dir.path()));
    assert_eq!(again["results"]["from_cache"], 2);
}

#[test]
fn budget_override_is_enforced() {
    assert_eq!(run(&["maximals", "--catalog", "X5"]).status.code(), Some(0));
    let o = run(&["maximals", "--catalog", "X5", "--budget", "f2=4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeds"), "{}", stderr(&o));
    assert_eq!(run(&["maximals", "--catalog", "X5", "--budget", "bogus=1"]).status.code(), Some(1));
}

#[test]
fn analyze_and_decompose_run() {
    let o = run(&["analyze", "--catalog", "EXT3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c(L) = 2, m(L) = 2"));
    let o = run(&["analyze", "--catalog", "EX1"]);
    assert_eq!(o.status.code(), Some(0));
    let d = json(&run(&["decompose", "--catalog", "EXT3", "--format", "json"]));
    assert_eq!(d["results"]["extreme_condition"], true);
    let c = json(&run(&["chief", "--catalog", "X5", "--seed", "3", "--format", "json"]));
    assert_eq!(c["results"]["c"], 3);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("report.json");
    let o = run(&["series", "--catalog", "T2", "--format", "json", "--output", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
    assert_eq!(v["command"], "series");
}
