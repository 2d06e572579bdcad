//! End-to-end checks of the ybq binary: exit codes, report shape, and
//! deterministic output. All runs use small N and few samples to stay fast.

use std::process::{Command, Output};

fn ybq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybq"))
        .args(args)
        .output()
        .expect("ybq runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn help_lists_subcommands() {
    let out = ybq(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for sub in ["verify", "suite", "bench", "describe"] {
        assert!(text.contains(sub), "help is missing {sub}: {text}");
    }
}

#[test]
fn verify_pass_exits_zero() {
    let out = ybq(&[
        "verify", "--identity", "qybe", "--family", "rational", "--N", "2", "--samples", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["schema"], "ybq-report/1");
    assert_eq!(doc["mode"], "verify");
    assert_eq!(doc["entries"][0]["passed"], true);
    assert_eq!(doc["entries"][0]["expectation"], "hold");

    let text = ybq(&[
        "verify", "--identity", "qybe", "--family", "rational", "--N", "2", "--samples", "2",
        "--format", "text",
    ]);
    assert_eq!(text.status.code(), Some(0));
    let body = String::from_utf8(text.stdout).unwrap();
    assert!(body.contains("[ok]"), "{body}");
    assert!(body.contains("summary:"), "{body}");
}

#[test]
fn verify_detects_genuine_violation() {
    // the constant-level family satisfies only the diagonal-corrected
    // relation at N >= 3, so asking for the plain one must fail
    let out = ybq(&[
        "verify", "--identity", "aybe", "--family", "s-const", "--N", "3", "--samples", "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert_eq!(doc["entries"][0]["passed"], false);
    let body = String::from_utf8(out.stdout).unwrap();
    assert!(body.contains("modified-aybe"), "should point at the corrected relation: {body}");
}

#[test]
fn negative_control_is_a_break_check() {
    let out = ybq(&["verify", "--identity", "negative-control", "--N", "2", "--samples", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["entries"][0]["expectation"], "break");
    assert_eq!(doc["entries"][0]["passed"], true);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["verify", "--identity", "no-such-identity"],
        &["verify", "--identity", "qybe", "--family", "no-such-family"],
        // aybe needs a family
        &["verify", "--identity", "aybe"],
        // the classical relation does not apply to a quantum family
        &["verify", "--identity", "cybe", "--family", "rational"],
    ];
    for args in cases {
        let out = ybq(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains("error"), "args {args:?}: {err}");
    }
}

#[test]
fn suite_small_run_passes() {
    let out = ybq(&["suite", "--N", "2", "--samples", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["mode"], "suite");
    assert_eq!(doc["summary"]["failed"], 0);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 39);
}

#[test]
fn suite_reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = ybq(&[
            "suite", "--N", "2", "--samples", "2", "--seed", "9",
            "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);
}

#[test]
fn timings_flag_is_accepted() {
    let out = ybq(&["verify", "--identity", "fay", "--N", "2", "--samples", "2", "--timings"]);
    assert_eq!(out.status.code(), Some(0));
    stdout_json(&out);
}

#[test]
fn describe_reports_known_entry_count() {
    // the trigonometric family has 12 N^2 - 4 N stored entries
    let out = ybq(&["describe", "--family", "trig", "--N", "2", "--limit", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["schema"], "ybq-describe/1");
    assert_eq!(doc["nnz"], 40);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 40);

    let text = ybq(&["describe", "--family", "trig", "--N", "2", "--format", "text"]);
    assert_eq!(text.status.code(), Some(0));
    let body = String::from_utf8(text.stdout).unwrap();
    assert!(body.contains("40 nonzero entries"), "{body}");
    // default limit truncates the listing
    assert!(body.contains("..."), "{body}");
}

#[test]
fn bench_checks_the_entry_count_formula() {
    let out = ybq(&["bench", "--sizes", "2,4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["sizes"][0]["nnz"], 40);
    assert_eq!(doc["sizes"][0]["nnz_expected"], 40);
    assert_eq!(doc["sizes"][1]["nnz"], 176);
}

#[test]
fn bench_budget_skips_the_product() {
    let out = ybq(&["bench", "--sizes", "4", "--budget-mib", "0", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let body = String::from_utf8(out.stdout).unwrap();
    assert!(body.contains("skipped"), "{body}");
}

#[test]
fn out_dir_env_resolves_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ybq"))
        .args([
            "verify", "--identity", "skew", "--family", "rational", "--N", "2", "--samples", "1",
            "--out", "nested/report.json",
        ])
        .env("YBQ_OUT_DIR", dir.path())
        .output()
        .expect("ybq runs");
    assert_eq!(out.status.code(), Some(0));
    // the body goes to the file, not stdout
    assert!(out.stdout.is_empty());
    let target = dir.path().join("nested/report.json");
    let doc: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&target).unwrap()).unwrap();
    assert_eq!(doc["schema"], "ybq-report/1");
}
