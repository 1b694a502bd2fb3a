//! End-to-end tests of the command-line contract: flags, formats, exit
//! codes, and the CSV orbit dumps.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pairsphere"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_single_suite_passes() {
    let out = run(&["verify", "strata", "--seed", "7", "--samples", "300"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS strata/strata.chart_roundtrip"));
    assert!(text.contains("result: PASS"));
}

#[test]
fn verify_json_has_schema_fields() {
    let out = run(&[
        "verify",
        "algebra",
        "--seed",
        "3",
        "--samples",
        "200",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["seed"], 3);
    assert_eq!(report["samples"], 200);
    assert!(report["tolerances"]["identity"].is_f64());
    assert!(report["tolerances"]["geometry"].is_f64());
    assert!(report["rng"].is_string());
    assert_eq!(report["all_pass"], true);
    let checks = report["suites"][0]["checks"].as_array().unwrap();
    for check in checks {
        for field in ["name", "anchor", "samples", "max_error", "pass", "wall_ms"] {
            assert!(!check[field].is_null(), "missing field {field}");
        }
    }
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = run(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_rejects_zero_samples() {
    let out = run(&["verify", "all", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_rejects_bad_tolerance() {
    let out = run(&["verify", "algebra", "--tol-identity", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "algebra", "--tol-geometry", "-1e-9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_rejects_unwritable_dump_path() {
    let out = run(&[
        "verify",
        "algebra",
        "--samples",
        "50",
        "--dump",
        "/nonexistent-dir/report.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_dump_file() {
    let path = std::env::temp_dir().join("pairsphere_dump_test.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&[
        "verify",
        "algebra",
        "--samples",
        "100",
        "--format",
        "json",
        "--dump",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dumped = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dumped, stdout(&out));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn tightened_tolerance_flips_exit_code() {
    let out = run(&[
        "verify",
        "algebra",
        "--samples",
        "100",
        "--tol-identity",
        "1e-30",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
}

#[test]
fn orbit_dumps_expected_rows() {
    let out = run(&["orbit", "f1", "--count", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "orbit_id,step,x1,x2,x3,y1,y2,y3");
    assert_eq!(lines.len(), 1 + 3 * 4);

    let out = run(&["orbit", "l21", "--count", "1"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "orbit_id,step,a,b,c,d");
    assert_eq!(lines.len(), 1 + 2);
}

#[test]
fn orbit_is_seeded() {
    let a = stdout(&run(&["orbit", "l85", "--count", "2", "--seed", "5"]));
    let b = stdout(&run(&["orbit", "l85", "--count", "2", "--seed", "5"]));
    let c = stdout(&run(&["orbit", "l85", "--count", "2", "--seed", "6"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn orbit_rejects_unknown_generator() {
    let out = run(&["orbit", "f9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_values_have_full_precision() {
    let text = stdout(&run(&["orbit", "f5", "--count", "1"]));
    let row = text.lines().nth(1).unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields.len(), 8);
    for value in &fields[2..] {
        assert!(value.contains('e'), "scientific notation expected: {value}");
        let mantissa = value.split('e').next().unwrap();
        let digits = mantissa.chars().filter(|c| c.is_ascii_digit()).count();
        assert_eq!(digits, 17, "17 significant digits expected: {value}");
    }
}
