//! End-to-end tests of the binary: exit codes, report formats, single-value
//! evaluation and byte-level reproducibility of JSON output.

use std::process::{Command, Output};

fn finhyp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finhyp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn verify_small_grid_exits_zero() {
    let out = finhyp(&["verify", "msw", "--weight-max", "3", "--n-max", "6"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    // Header, separator and one row per (index, N) pair.
    assert_eq!(text.lines().count(), 2 + 7 * 6);
    assert!(text.contains("| msw |"));
}

#[test]
fn unknown_identity_exits_two() {
    let out = finhyp(&["verify", "does-not-exist"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown identity"), "{err}");
}

#[test]
fn json_reports_are_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for path in [&first, &second] {
        let out = finhyp(&[
            "verify",
            "finite-gauss",
            "--trials",
            "12",
            "--seed",
            "42",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{out:?}");
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b);

    let parsed: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 12);
    for row in rows {
        assert_eq!(row["equal"], serde_json::Value::Bool(true));
        assert_eq!(row["seed"], serde_json::json!(42));
        for key in ["identity", "params", "n", "lhs", "rhs", "equal", "seed", "rejected", "ms"] {
            assert!(row.get(key).is_some(), "missing key {key}");
        }
    }
}

#[test]
fn different_seed_changes_sampled_instances() {
    let run = |seed: &str| {
        let out = finhyp(&[
            "verify", "disc-beta", "--trials", "5", "--seed", seed, "--format", "json",
        ]);
        assert!(out.status.success());
        stdout(&out)
    };
    assert_ne!(run("1"), run("2"));
}

#[test]
fn eval_prints_exact_values() {
    let out = finhyp(&["eval", "mzv", "--index", "1,2", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "5/12");

    let out = finhyp(&["eval", "beta", "--params", "1/2,1/2", "--n", "1"]);
    assert_eq!(stdout(&out).trim(), "4");

    let out = finhyp(&[
        "eval", "pfq", "--upper", "1/2,1", "--lower", "2", "--z", "1/2", "--n", "1",
    ]);
    assert_eq!(stdout(&out).trim(), "5/4");

    let out = finhyp(&["eval", "tilde-zeta", "--index", "2;1", "--n", "5"]);
    assert_eq!(stdout(&out).trim(), "1117/1728");

    let out = finhyp(&["eval", "ak", "--index", "1;2", "--p", "5"]);
    assert_eq!(stdout(&out).trim(), "2953/1728");
}

#[test]
fn eval_rejects_poles_with_exit_two() {
    let out = finhyp(&["eval", "mpl", "--index", "2", "--z", "4/3", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_lists_index_sets() {
    let out = finhyp(&["enumerate", "i0tilde", "--k", "3", "--q", "2", "--h", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,2;0\n2;1\n");

    let out = finhyp(&["enumerate", "i0", "--k", "4", "--r", "2", "--h", "1"]);
    assert_eq!(stdout(&out), "1,3\n");
}

#[test]
fn limits_pass_on_reduced_grid() {
    let out = finhyp(&["limits", "--n-grid", "100,1000", "--tol", "0.05"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("| disc-power |"));
    assert!(text.contains("| aar-beta |"));
}

#[test]
fn csv_format_has_header_and_rows() {
    let out = finhyp(&[
        "verify", "msw", "--weight-max", "1", "--n-max", "3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "identity,params,n,lhs,rhs,equal,seed,rejected,ms"
    );
    assert_eq!(lines.count(), 3);
}
