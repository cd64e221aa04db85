//! End-to-end tests driving the compiled binary: output shapes, exit
//! codes (0 success, 1 verification failure, 2 usage errors), and
//! determinism of repeated invocations.

use std::process::Command;

/// Run the binary and capture (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qdissect"))
        .args(args)
        .output()
        .expect("spawn qdissect");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn expand_dumps_csv_with_header() {
    let (code, out, _) = run(&["expand", "--sgf", "6,3", "--precision", "10"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "# precision=10\nn,coefficient\n\
         0,1\n1,2\n2,4\n3,6\n4,10\n5,16\n6,24\n7,36\n8,52\n9,74\n10,104\n"
    );
}

#[test]
fn expand_handles_precision_zero() {
    let (code, out, _) = run(&["expand", "--expr", "F(1)", "--precision", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "# precision=0\nn,coefficient\n0,1\n");
}

#[test]
fn expand_emits_json() {
    let (code, out, _) = run(&[
        "expand",
        "--expr",
        "F(2)/F(1)^2",
        "--precision",
        "8",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json stdout");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["source"], "F(2)/F(1)^2");
    assert_eq!(v["precision"], 8);
    assert!(v.get("modulus").is_none());
    let coeffs: Vec<&str> = v["coefficients"]
        .as_array()
        .expect("coefficient array")
        .iter()
        .map(|c| c.as_str().expect("string coefficient"))
        .collect();
    assert_eq!(coeffs, ["1", "2", "4", "8", "14", "24", "40", "64", "100"]);
}

#[test]
fn expand_reduces_modulo() {
    let (code, out, _) = run(&[
        "expand",
        "--expr",
        "F(2)/F(1)^2",
        "--precision",
        "6",
        "--mod",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "# precision=6\n# modulus=4\nn,coefficient\n0,1\n1,2\n2,0\n3,0\n4,2\n5,0\n6,0\n"
    );

    let (code, out, _) = run(&[
        "expand", "--sgf", "3,1", "--precision", "4", "--mod", "3", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json stdout");
    assert_eq!(v["modulus"], 3);
    assert_eq!(v["source"], "sgf:3,1");
}

#[test]
fn expand_rejects_malformed_expressions() {
    let (code, out, err) = run(&["expand", "--expr", "P(1,1)*X", "--precision", "5"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("parse error at byte 7"), "stderr: {err}");

    let (code, _, err) = run(&["expand", "--expr", "P(0,2)", "--precision", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("product offset must be nonzero"), "stderr: {err}");
}

#[test]
fn expand_requires_exactly_one_source() {
    let (code, _, err) = run(&["expand", "--precision", "5"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());

    let (code, _, err) = run(&["expand", "--expr", "F(1)", "--sgf", "2,1", "--precision", "5"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn verify_reports_success_as_json() {
    let (code, out, _) = run(&["verify", "--identity", "p3", "--precision", "150"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json report");
    assert_eq!(v["identity_id"], "p3");
    assert_eq!(v["status"], "verified");
    assert_eq!(v["precision"], 150);
    assert!(v.get("mismatch").is_none());
}

#[test]
fn verify_takes_parameters() {
    let (code, out, _) = run(&[
        "verify",
        "--identity",
        "d3",
        "--params",
        "i=2,k=7",
        "--precision",
        "80",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json report");
    assert_eq!(v["status"], "verified");
    assert_eq!(v["params"]["i"], 2);
    assert_eq!(v["params"]["k"], 7);
}

#[test]
fn verify_failure_sets_exit_code_and_mismatch() {
    // The quotient congruence holds mod 4 (and mod 8) but not mod 16.
    let (code, out, _) = run(&["verify", "--identity", "q24q8", "--precision", "80"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json report");
    assert_eq!(v["modulus"], 4);

    let (code, out, _) = run(&["verify", "--identity", "q24q8", "--mod", "16", "--precision", "60"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json report");
    assert_eq!(v["status"], "failed");
    assert_eq!(v["mismatch"]["exponent"], 1);
    assert_eq!(v["mismatch"]["lhs"], "8");
    assert_eq!(v["mismatch"]["rhs"], "0");
}

#[test]
fn verify_rejects_unknown_identities_and_bad_params() {
    let (code, _, err) = run(&["verify", "--identity", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown identity nope"), "stderr: {err}");
    assert!(err.contains("known ids"), "stderr: {err}");

    // d3 needs i < k.
    let (code, _, err) = run(&["verify", "--identity", "d3", "--params", "i=5,k=3"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn oracle_counts_match_series() {
    let (code, out, _) = run(&["oracle", "--what", "pbar", "--n-max", "12"]);
    assert_eq!(code, 0, "stdout: {out}");
    assert!(out.contains("match"));
    assert!(!out.contains("NO"));
    let row: Vec<&str> = out
        .lines()
        .find(|l| l.trim_start().starts_with("3 "))
        .expect("row for n = 3")
        .split_whitespace()
        .collect();
    assert_eq!(row, ["3", "8", "8", "yes"]);
}

#[test]
fn oracle_golden_csv_rows() {
    let (code, out, _) = run(&[
        "oracle", "--what", "s", "--params", "K=6,i=3", "--n-max", "6", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "6,3,0,1\n6,3,1,2\n6,3,2,4\n6,3,3,6\n6,3,4,10\n6,3,5,16\n6,3,6,24\n");
}

#[test]
fn oracle_checks_both_restricted_counts() {
    for what in ["abar", "bbar"] {
        let (code, out, _) = run(&[
            "oracle", "--what", what, "--params", "k=3,i=3,j=1", "--n-max", "10",
        ]);
        assert_eq!(code, 0, "{what} stdout: {out}");
        assert!(!out.contains("NO"), "{what} stdout: {out}");
    }
}

#[test]
fn oracle_enforces_enumeration_cap() {
    let (code, _, err) = run(&["oracle", "--what", "pbar", "--n-max", "31"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "stderr: {err}");

    let (code, _, err) = run(&["expand", "--expr", "F(1)", "--precision", "100001"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "stderr: {err}");
}

#[test]
fn suite_reports_every_claim() {
    let path = std::env::temp_dir().join(format!("qdissect-suite-{}.json", std::process::id()));
    let path_str = path.to_str().expect("utf-8 temp path");
    let (code, out, _) = run(&["suite", "--k-max", "8", "--n-max", "40", "--out", path_str]);
    assert_eq!(code, 0, "stdout: {out}");
    assert!(out.contains("22 claim(s) checked for n <= 40: all verified"), "stdout: {out}");

    let json = std::fs::read_to_string(&path).expect("report file written");
    std::fs::remove_file(&path).ok();
    let reports: serde_json::Value = serde_json::from_str(&json).expect("json report array");
    let reports = reports.as_array().expect("array");
    assert_eq!(reports.len(), 22);
    for r in reports {
        assert_eq!(r["status"], "verified", "claim {r}");
        assert_eq!(r["n_max"], 40);
        assert!(r.get("counterexample").is_none());
    }
}

#[test]
fn scan_lists_empirical_findings() {
    let (code, out, _) = run(&["scan", "--d", "3", "--mod", "4", "--k-max", "6", "--n-max", "40"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# S-series progressions 3n+a"), "stdout: {out}");
    assert!(out.contains("k=6 i=3 progression 3n+2 mod 4"), "stdout: {out}");
    assert!(out.trim_end().ends_with("3 progression(s) found"), "stdout: {out}");
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let args = ["expand", "--sgf", "8,2", "--precision", "50", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first, second);
}
