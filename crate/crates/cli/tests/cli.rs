//! End-to-end tests of the `minorphi` binary: output formats, exit codes,
//! determinism, and the round trip from printed minors back through the
//! parser.

use std::process::{Command, Output};

use minorphi::{minor_table, Polynomial, RingSpec};

fn minorphi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minorphi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn minors_text_output() {
    let out = minorphi(&["minors", "--n", "2", "--ring", "z"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "m1 = x1\nm2 = x1^2 - x2\n");
}

#[test]
fn minors_fourth_line() {
    let out = minorphi(&["minors", "--n", "4", "--ring", "z"]);
    let text = stdout(&out);
    assert_eq!(
        text.lines().nth(3).unwrap(),
        "m4 = x1^4 - 3*x1^2*x2 + 2*x1*x3 + x2^2 - x4"
    );
}

#[test]
fn minors_over_small_modulus() {
    let out = minorphi(&["minors", "--n", "1", "--ring", "zmod:2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "m1 = x1\n");
}

#[test]
fn minors_json_round_trips_through_parser() {
    let out = minorphi(&["minors", "--n", "5", "--ring", "zmod:6", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let items = parsed.as_array().unwrap();
    assert_eq!(items.len(), 5);
    assert_eq!(items[0]["k"], 1);
    assert_eq!(items[0]["poly"]["ring"], "zmod:6");
    assert_eq!(items[0]["poly"]["nvars"], 5);
}

#[test]
fn minors_text_round_trips_through_parser() {
    let ring = RingSpec::integers();
    let out = minorphi(&["minors", "--n", "6", "--ring", "z"]);
    let table = minor_table(&ring, 6);
    for (idx, line) in stdout(&out).lines().enumerate() {
        let k = idx + 1;
        let prefix = format!("m{k} = ");
        let rest = line.strip_prefix(&prefix).expect("line shape");
        let parsed = Polynomial::parse(&ring, 6, rest).unwrap();
        assert_eq!(parsed, table.minors()[k], "line {k}");
    }
}

#[test]
fn phi_applies_substitution() {
    let out = minorphi(&["phi", "--n", "2", "--ring", "z", "--poly", "x2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x1^2 - x2\n");
}

#[test]
fn phi_twice_is_identity() {
    let out = minorphi(&["phi", "--n", "2", "--ring", "z", "--poly", "x2", "--twice"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x2\n");
}

#[test]
fn phi_fixes_constants() {
    let out = minorphi(&["phi", "--n", "3", "--ring", "z", "--poly", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n");
}

#[test]
fn phi_json_output() {
    let out = minorphi(&[
        "phi", "--n", "2", "--ring", "z", "--poly", "x2", "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["ring"], "z");
    assert_eq!(parsed["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_passes_and_prints_one_line_per_generator() {
    let out = minorphi(&["verify", "--n", "8", "--ring", "z"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    for (idx, line) in lines.iter().enumerate() {
        assert_eq!(*line, format!("x{}: PASS", idx + 1));
    }
}

#[test]
fn verify_base_case_over_zero_divisor_ring() {
    let out = minorphi(&["verify", "--n", "1", "--ring", "zmod:6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x1: PASS\n");
}

#[test]
fn verify_json_reports_overall() {
    let out = minorphi(&[
        "verify", "--n", "10", "--ring", "zmod:2", "--format", "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["overall"], true);
    assert_eq!(parsed["generators"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_with_corrupted_minor_exits_one() {
    let out = minorphi(&["verify", "--n", "4", "--ring", "z", "--corrupt", "2=x2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("x3: FAIL"), "unexpected output:\n{text}");
}

#[test]
fn colsdet_special_cases() {
    let out = minorphi(&["colsdet", "--n", "2", "--ring", "z", "--column", "x1,x2"]);
    assert_eq!(stdout(&out), "x1^2 - x2\n");

    let out = minorphi(&["colsdet", "--n", "2", "--ring", "z", "--column", "1,0"]);
    assert_eq!(stdout(&out), "x1\n");

    let out = minorphi(&["colsdet", "--n", "1", "--ring", "z", "--column", "7"]);
    assert_eq!(stdout(&out), "7\n");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["minors", "--n", "9", "--ring", "zmod:8", "--format", "json"];
    let first = minorphi(&args);
    let second = minorphi(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    // unknown ring
    let out = minorphi(&["minors", "--n", "2", "--ring", "q"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr(&out).is_empty());
    assert!(stdout(&out).is_empty());

    // bad polynomial
    let out = minorphi(&["phi", "--n", "2", "--ring", "z", "--poly", "x1 +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error"));

    // variable out of range
    let out = minorphi(&["phi", "--n", "2", "--ring", "z", "--poly", "x3"]);
    assert_eq!(out.status.code(), Some(2));

    // n = 0 rejected by the argument parser
    let out = minorphi(&["minors", "--n", "0", "--ring", "z"]);
    assert_eq!(out.status.code(), Some(2));

    // missing required flag
    let out = minorphi(&["phi", "--n", "2", "--ring", "z"]);
    assert_eq!(out.status.code(), Some(2));

    // column longer than n
    let out = minorphi(&["colsdet", "--n", "1", "--ring", "z", "--column", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_guard_is_overridable() {
    let out = minorphi(&["minors", "--n", "25", "--ring", "z"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--max-n"));

    let out = minorphi(&["minors", "--n", "25", "--ring", "z", "--max-n", "25"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 25);
}
