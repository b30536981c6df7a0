use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordbell")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).expect("valid JSON")
}

fn usage_error(args: &[&str]) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    assert!(!out.stderr.is_empty());
}

#[test]
fn family_ordered_bell_constant_term() {
    assert_eq!(ok(&["family", "--kind", "ordered-bell", "--n", "3"]).trim(), "13 + 9x + 3x^2 + x^3");
    let doc = json(&["family", "--kind", "ordered-bell", "--n", "3"]);
    assert_eq!(doc["coeffs"][0], "13");
}

#[test]
fn family_bernoulli_zero_is_one() {
    assert_eq!(ok(&["family", "--kind", "bernoulli", "--n", "0"]).trim(), "1");
}

#[test]
fn family_degenerate_symbolic_constant_term() {
    let doc = json(&["family", "--kind", "degenerate-ordered-bell", "--n", "2", "--lambda", "sym"]);
    assert_eq!(doc["lambda"], "sym");
    assert_eq!(doc["coeffs"][0]["lambda_coeffs"], serde_json::json!(["3", "-1"]));
    let text = ok(&["family", "--kind", "degenerate-ordered-bell", "--n", "2", "--lambda", "sym"]);
    assert!(text.starts_with("(3 - λ)"), "{text}");
}

#[test]
fn family_with_negative_specialized_lambda() {
    // b_{1,λ}(x) = x + 1 does not depend on λ.
    let doc = json(&["family", "--kind", "degenerate-ordered-bell", "--n", "1", "--lambda", "-1/2"]);
    assert_eq!(doc["lambda"], "-1/2");
    assert_eq!(doc["coeffs"], serde_json::json!(["1", "1"]));
}

#[test]
fn family_usage_errors() {
    usage_error(&["family", "--kind", "catalan", "--n", "2"]);
    usage_error(&["family", "--kind", "degenerate-ordered-bell", "--n", "2"]);
    usage_error(&["family", "--kind", "bernoulli", "--n", "2", "--lambda", "sym"]);
    usage_error(&["family", "--kind", "degenerate-ordered-bell", "--n", "2", "--lambda", "0"]);
    usage_error(&["family", "--kind", "bernoulli", "--n", "80"]);
    usage_error(&["--max-degree", "4", "family", "--kind", "bernoulli", "--n", "5"]);
    usage_error(&["family", "--kind", "bernoulli"]);
}

#[test]
fn represent_square_in_ordered_bell_basis() {
    let text = ok(&["represent", "--coeffs", "0,0,1", "--basis", "ordered-bell"]);
    assert_eq!(text, "basis ordered-bell r=1\na_0 = -1\na_1 = -2\na_2 = 1\n");
    for variant in ["functional", "iterated-difference", "factored-difference", "binomial-sum", "stirling-derivative"] {
        let doc = json(&["represent", "--coeffs", "0,0,1", "--basis", "ordered-bell", "--variant", variant]);
        assert_eq!(doc["coeffs"], serde_json::json!(["-1", "-2", "1"]), "{variant}");
    }
}

#[test]
fn represent_basis_element_is_unit_vector() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b4.json");
    fs::write(&path, serde_json::to_string(&json(&["family", "--kind", "ordered-bell", "--n", "4"])).unwrap()).unwrap();
    let doc = json(&["represent", "--input", path.to_str().unwrap(), "--basis", "ordered-bell"]);
    assert_eq!(doc["coeffs"], serde_json::json!(["0", "0", "0", "0", "1"]));
    assert_eq!(doc["basis"]["kind"], "ordered-bell");
}

#[test]
fn represent_bernoulli_four_in_ordered_bell_basis() {
    // a_k = C(4,k)(B_{4-k} - δ_{4-k,1}) with B = 1, -1/2, 1/6, 0, -1/30.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("B4.json");
    fs::write(&path, serde_json::to_string(&json(&["family", "--kind", "bernoulli", "--n", "4"])).unwrap()).unwrap();
    let doc = json(&["represent", "--input", path.to_str().unwrap(), "--basis", "ordered-bell"]);
    assert_eq!(doc["coeffs"], serde_json::json!(["-1/30", "0", "1", "-6", "1"]));
}

#[test]
fn represent_json_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let input = r#"{"var":"x","lambda":"sym","coeffs":["1",{"lambda_coeffs":["0","2"]},"3"]}"#;
    fs::write(&path, input).unwrap();
    let args = ["represent", "--input", path.to_str().unwrap(), "--basis", "degenerate-ordered-bell", "--r", "2", "--lambda", "sym"];
    let first = json(&args);
    assert_eq!(first["basis"], serde_json::json!({"kind": "degenerate-ordered-bell", "order": 2}));
    assert_eq!(ok(&[&["--format", "json"][..], &args[..]].concat()), ok(&[&["--format", "json"][..], &args[..]].concat()));
    // Expanding the input's own family member returns the same document shape.
    let poly = json(&["family", "--kind", "degenerate-ordered-bell", "--n", "3", "--r", "2", "--lambda", "sym"]);
    fs::write(&path, serde_json::to_string(&poly).unwrap()).unwrap();
    let rep = json(&args[..]);
    let ones: Vec<Value> = rep["coeffs"].as_array().unwrap().iter().cloned().collect();
    assert_eq!(ones.last().unwrap(), "1");
    assert!(ones[..3].iter().all(|c| c == "0"));
}

#[test]
fn represent_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sym.json");
    fs::write(&path, r#"{"lambda":"sym","coeffs":[{"lambda_coeffs":["0","1"]}]}"#).unwrap();
    usage_error(&["represent", "--input", path.to_str().unwrap(), "--basis", "bernoulli"]);
    usage_error(&["represent", "--input", path.to_str().unwrap(), "--basis", "degenerate-ordered-bell", "--lambda", "1/3"]);
    fs::write(&path, "not json").unwrap();
    usage_error(&["represent", "--input", path.to_str().unwrap(), "--basis", "bernoulli"]);
    usage_error(&["represent", "--input", "/nonexistent/file.json", "--basis", "bernoulli"]);
    usage_error(&["represent", "--coeffs", "1,x", "--basis", "bernoulli"]);
    usage_error(&["represent", "--coeffs", "1,2", "--basis", "bernoulli", "--variant", "magic"]);
    usage_error(&["represent", "--coeffs", "1,2", "--basis", "euler"]);
    usage_error(&["represent", "--basis", "bernoulli"]);
}

#[test]
fn numbers_tables() {
    let bell = ok(&["numbers", "--kind", "ordered-bell", "--count", "8"]);
    let values: Vec<&str> = bell.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(values, ["1", "1", "3", "13", "75", "541", "4683", "47293"]);
    let doc = json(&["numbers", "--kind", "genocchi", "--count", "3"]);
    assert_eq!(doc["values"], serde_json::json!(["0", "1", "-1"]));
    let doc = json(&["numbers", "--kind", "stirling2", "--n", "4"]);
    assert_eq!(doc["values"], serde_json::json!(["0", "1", "7", "6", "1"]));
    usage_error(&["numbers", "--kind", "euler", "--count", "100", "--max-degree", "20"]);
    usage_error(&["numbers", "--kind", "stirling2"]);
    usage_error(&["numbers", "--kind", "stirling2", "--n", "70"]);
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = run(&["verify", "--filter", "EQ2A", "--max-n", "8", "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["total"], 7);
    assert_eq!(doc["theorem_path_mismatches"], 0);
    assert_eq!(doc["printed_form_mismatches"], 6);
    assert!(doc["reports"][0]["elapsed_ms"].is_u64());

    assert_eq!(run(&["verify", "--filter", "S6B", "--max-n", "10", "--lambda", "sym"]).status.code(), Some(0));
    usage_error(&["verify", "--filter", "NONEXISTENT"]);
    usage_error(&["verify", "--filter", "S6A", "--lambda", "0"]);
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["--seed", "11", "verify", "--filter", "EQ2A,S6E", "--max-n", "5", "--r-max", "1", "--lambda", "sym,-2/5"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    assert!(first.contains("printed-form witness at x = "));
    assert!(first.ends_with("status: pass\n"));
    let json_args = [&["--format", "json"][..], &args[..]].concat();
    let doc: Value = serde_json::from_str(&ok(&json_args)).unwrap();
    assert!(doc["reports"][0].get("elapsed_ms").is_none());
    assert_eq!(ok(&json_args), ok(&json_args));
}
