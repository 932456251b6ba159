mod common;

use std::process::Command;

use common::*;
use ordvga::cli::{run_cli, EXIT_INPUT, EXIT_OK, EXIT_SOLVER, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(std::iter::once("ordvga").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn assess_laptops_prints_best() {
    let (code, out, _) = run(&["assess", &path("laptops.csv")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l == "best: H"), "{out}");
    assert!(out.contains("top tier: A, B, H"));
}

#[test]
fn rank_provinces_starts_with_dm21() {
    let (code, out, _) = run(&["rank", &path("provinces.csv"), "--rounds", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("1. DM-21"));
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn validate_reports_shape() {
    let (code, out, _) = run(&["validate", &path("laptops.csv")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "valid: 4 metrics x 6 DMUs");
}

#[test]
fn zero_value_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    let text = std::fs::read_to_string(fixture("laptops.csv")).unwrap().replacen(",1.6,", ",0,", 1);
    std::fs::write(&bad, text).unwrap();
    let (code, _, err) = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.starts_with("error: "));
}

#[test]
fn missing_file_and_unknown_dmu_are_input_errors() {
    assert_eq!(run(&["assess", "/nonexistent/matrix.csv"]).0, EXIT_INPUT);
    let (code, _, err) = run(&["plot", &path("laptops.csv"), "--dmu", "Z", "--stage", "1"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("unknown DMU"));
    let (code, _, err) = run(&["plot", &path("laptops.csv"), "--dmu", "K", "--stage", "2"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("not in the top tier"));
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(run(&[]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["plot", &path("laptops.csv"), "--dmu", "K", "--stage", "3"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn assess_writes_report_and_plots() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let plots = dir.path().join("plots");
    let (code, _, err) = run(&["assess", &path("laptops.csv"), "--out", json.to_str().unwrap(), "--plots", plots.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{err}");
    let report = ordvga::report::load_report(&json).unwrap();
    assert_eq!(report.best, "H");
    assert!(plots.join("stage1-K.svg").exists());
    assert!(plots.join("stage2-H.svg").exists());
    assert!(!plots.join("stage2-K.svg").exists());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ordvga");
    let ok = Command::new(bin).args(["assess", &path("laptops.csv")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("best: H"));
    let missing = Command::new(bin).args(["validate", "/nonexistent.csv"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(EXIT_INPUT));
    let usage = Command::new(bin).arg("assess").output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}

#[test]
fn degenerate_price_face_is_a_solver_error() {
    // Second matrix of this stream: a top-tier DMU efficient only through a
    // Likert bound has no nonzero Stage II prices.
    let mut r = rng(0x5eed_0001);
    random_matrix(&mut r);
    let m = random_matrix(&mut r);
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("m.csv");
    m.save(&csv).unwrap();
    let (code, _, err) = run(&["assess", csv.to_str().unwrap()]);
    assert_eq!(code, EXIT_SOLVER, "{err}");
    assert!(err.contains("numerical breakdown"));
}
