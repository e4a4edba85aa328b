//! End-to-end checks of the `vdm` binary: output shape and exit codes.

use std::process::Command;

fn vdm(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_vdm"))
        .args(args)
        .output()
        .expect("failed to run vdm")
}

#[test]
fn generators_lists_one_polynomial_per_line() {
    let out = vdm(&["generators", "--n", "4", "--k", "2"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 3); // C(3, 2) minors
    for line in stdout.lines() {
        assert!(line.contains("x1"), "unexpected generator line: {line}");
    }
}

#[test]
fn generators_json_is_an_array_of_strings() {
    let out = vdm(&["generators", "--n", "4", "--k", "2", "--format", "json"]);
    assert!(out.status.success());
    let parsed: Vec<String> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed.len(), 3);
}

#[test]
fn hilbert_reports_dimension_and_degree() {
    let out = vdm(&["hilbert", "--n", "5", "--k", "2"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("dim 2"));
    assert!(stdout.contains("degree 15"));
}

#[test]
fn betti_table_has_expected_totals() {
    let out = vdm(&["betti", "--n", "6", "--k", "2"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("total: 1 10 20 15 4"));
}

#[test]
fn verify_emits_json_lines_and_succeeds() {
    let out = vdm(&["verify", "--n", "4", "--k", "2", "--claim", "dim-deg"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    assert_eq!(v["claim"], "dim-deg");
    assert_eq!(v["passed"], true);
}

#[test]
fn invalid_parameters_exit_with_usage_error() {
    let out = vdm(&["generators", "--n", "2", "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn exhausted_reduction_budget_exits_with_resource_error() {
    let out = vdm(&["hilbert", "--n", "6", "--k", "3", "--max-reductions", "1"]);
    assert_eq!(out.status.code(), Some(3));
}
