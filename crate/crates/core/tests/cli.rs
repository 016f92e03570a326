use std::process::Command;

use qbessel::cli::run;
use serde_json::Value;

fn qb(args: &[&str]) -> qbessel::cli::Outcome {
    run(std::iter::once("qbessel").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = qb(args);
    (out.code, serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout)))
}

#[test]
fn verify_algebra_little_q_jacobi() {
    let (code, doc) = json(&["verify-algebra", "--rep", "little-q-jacobi", "--q", "1/2", "--a", "1/3", "--b", "3/4", "--r", "1/2", "--degree", "12"]);
    assert_eq!(code, 0);
    assert_eq!(doc["casimirs"][0]["value"], "-4/3");
    assert!(doc["relations"].as_array().unwrap().iter().all(|r| r["exact_match"] == true));
}

#[test]
fn verify_algebra_reports_documented_mismatches() {
    let (code, doc) = json(&["verify-algebra", "--rep", "minus1-jacobi", "--alpha", "1/2", "--beta", "3/2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["casimirs"][1]["central"], false);
    let (code, doc) = json(&["verify-algebra", "--rep", "q-bessel2", "--q", "1/2", "--a", "1/3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["literal_form"]["in_span"], false);
    assert_eq!(doc["intertwining"]["holds"], true);
    let (code, doc) = json(&["verify-algebra", "--rep", "daha", "--k", "3/4"]);
    assert_eq!((code, doc["passed"].clone()), (0, Value::Bool(true)));
}

#[test]
fn eval_cas() {
    let out = qb(&["eval", "--fn", "minus1-bessel", "--alpha", "-1/2", "--x", "1.0"]);
    assert_eq!(out.code, 0);
    let v: f64 = out.stdout.trim().parse().unwrap();
    assert!((v - (1f64.cos() + 1f64.sin())).abs() < 1e-12);
}

#[test]
fn eval_tables_and_modes() {
    let out = qb(&["eval", "--fn", "bessel-norm", "--alpha", "0.5", "--grid", "0:2:3", "--output", "csv"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "x,value");
    assert_eq!(lines.len(), 4);
    let out = qb(&["eval", "--fn", "q-laguerre", "--n", "2", "--q", "1/2", "--a", "1/3", "--x", "2", "--mode", "exact"]);
    assert_eq!(out.stdout.trim(), "8/9");
    let (code, doc) = json(&["eval", "--fn", "little-q-jacobi", "--n", "2", "--q", "1/2", "--a", "1/3", "--b", "3/4", "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(doc["family"], "little_q_jacobi");
    // exact mode rejects decimals
    assert_eq!(qb(&["eval", "--fn", "q-bessel3", "--a", "0.25", "--q", "1/3", "--x", "1/2", "--mode", "exact"]).code, 2);
    assert_eq!(qb(&["eval", "--fn", "q-pochhammer", "--a", "1/2", "--q", "1/2", "--n", "inf", "--mode", "exact"]).code, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qb(&["eval", "--fn", "cas", "--x", "1", "--bogus", "1"]).code, 2);
    assert_eq!(qb(&["eval", "--fn", "cas", "--x", "1", "--alpha", "1"]).code, 2);
    assert_eq!(qb(&["eval", "--fn", "nope", "--x", "1"]).code, 2);
    assert_eq!(qb(&["verify-algebra", "--rep", "little-q-jacobi", "--q", "1/2", "--a", "1/3", "--b", "3/4", "--r", "1/3"]).code, 2);
    assert_eq!(qb(&["verify-limits", "--case", "bessoula", "--gamma", "1"]).code, 2);
    assert_eq!(qb(&["verify-limits", "--case", "bessoula", "--beta", "1"]).code, 2);
    assert_eq!(qb(&["verify-eigen", "--family", "jacobi", "--alpha", "1/2", "--beta", "1/2"]).code, 2);
    assert_eq!(qb(&["nonsense"]).code, 2);
    let help = qb(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify-limits"));
}

#[test]
fn check_failures_exit_1_with_report() {
    let (code, doc) = json(&["verify-limits", "--case", "bessoula", "--alpha", "1/4", "--tolerance", "1e-9"]);
    assert_eq!(code, 1);
    assert_eq!(doc["passed"], false);
    assert!(doc["reports"][0]["decreasing"].as_bool().unwrap());
}

#[test]
fn verify_limits_and_eigen() {
    let (code, doc) = json(&["verify-limits", "--case", "bessoula", "--alpha", "1/4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["reports"][0]["params"]["alpha"], "1/4");
    let (code, _) = json(&["verify-limits", "--case", "qshifted", "--alpha", "0.7", "--n", "2"]);
    assert_eq!(code, 0);
    let (code, doc) = json(&["verify-eigen", "--family", "minus1-jacobi", "--alpha", "1/2", "--beta", "3/2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 13);
}

#[test]
fn transform_table_and_roundtrip() {
    let out = qb(&["transform", "--kind", "hankel", "--alpha", "1/2", "--grid", "0:2:3", "--output", "csv"]);
    assert_eq!(out.code, 0);
    let row: Vec<f64> = out.stdout.lines().nth(2).unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert!((row[1] - (-0.5f64).exp()).abs() < 1e-8);
    let (code, doc) = json(&["transform", "--kind", "minus1", "--alpha", "-1/2", "--function", "narrow-gaussian", "--roundtrip", "--grid", "-1:1:3", "--output", "json"]);
    assert_eq!(code, 0, "{doc}");
    assert!(doc["report"]["residual"].as_f64().unwrap() < 1e-7);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qbessel");
    let ok = Command::new(bin).args(["eval", "--fn", "cas", "--x", "0"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "1.0");
    let bad = Command::new(bin).args(["eval", "--fn", "cas"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    let env_mode = Command::new(bin)
        .env("QBESSEL_MODE", "exact")
        .args(["eval", "--fn", "laguerre", "--n", "1", "--alpha", "1/2", "--x", "1/3"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&env_mode.stdout).trim(), "7/6");
}
