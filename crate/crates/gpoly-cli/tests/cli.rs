//! End-to-end tests of the `gpoly` binary: files in, reports out, exit codes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gpoly(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpoly"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is json")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn gen_compute_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    let out = gpoly(&["gen", "cube", "3", "-o", "cube3.json"], tmp.path());
    assert_eq!(exit_code(&out), 0);

    let text = std::fs::read_to_string(tmp.path().join("cube3.json")).unwrap();
    let file: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(file["vertices"].as_array().unwrap().len(), 8);

    let out = gpoly(&["compute", "cube3.json"], tmp.path());
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["g"], serde_json::json!([1, 4]));
    assert_eq!(report["h"], serde_json::json!([1, 5, 5, 1]));
    assert_eq!(report["gbar"], serde_json::json!([1, 2]));
    assert_eq!(report["f_vector"], serde_json::json!([1, 8, 12, 6, 1]));
    assert_eq!(report["timing_ms"], Value::Null);
}

#[test]
fn compute_with_face_and_flags() {
    let tmp = tempfile::tempdir().unwrap();
    gpoly(&["gen", "cube", "3", "-o", "cube3.json"], tmp.path());
    let out = gpoly(
        &[
            "compute",
            "cube3.json",
            "--face",
            "vertex:0",
            "--flag",
            "0,2",
            "--flag",
            "1",
            "--mark",
            "1",
        ],
        tmp.path(),
    );
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["face"]["g_relative"], serde_json::json!([0, 1]));
    assert_eq!(report["face"]["g1_geometric"], 1);
    assert_eq!(report["face"]["g2_geometric"], 0);
    assert_eq!(report["flag_numbers"]["0,2"], "24");
    assert_eq!(report["flag_numbers"]["1"], "12");
    // Marked at position 1 with the face being vertex 0: chains restricted
    // to pass through that vertex.
    assert_eq!(report["relative_flag_numbers"]["0,2|k=1"], "3");
}

#[test]
fn compute_simplex_has_unit_g() {
    let tmp = tempfile::tempdir().unwrap();
    gpoly(&["gen", "simplex", "4", "-o", "s4.json"], tmp.path());
    let out = gpoly(&["compute", "s4.json"], tmp.path());
    let report = stdout_json(&out);
    assert_eq!(report["g"], serde_json::json!([1]));
}

#[test]
fn verify_passes_on_the_cube() {
    let tmp = tempfile::tempdir().unwrap();
    gpoly(&["gen", "cube", "3", "-o", "cube3.json"], tmp.path());
    let out = gpoly(&["verify", "cube3.json", "--checks", "all"], tmp.path());
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["failures"], 0);
    assert_eq!(report["checks"].as_array().unwrap().len(), 8);
    // The alternating-sum residual is the zero polynomial.
    let stanley = &report["checks"][0];
    assert_eq!(stanley["check"], "stanley");
    assert_eq!(stanley["residual"], serde_json::json!([]));
}

#[test]
fn joinunit_reports_the_recursion_value_on_joins() {
    // The defining relation gives g(P, F) = 0 on proper join factors, so the
    // required [1] fails; the binary must say so and exit 1.
    let tmp = tempfile::tempdir().unwrap();
    gpoly(
        &["gen", "join", "point", "square", "-o", "pyr.json"],
        tmp.path(),
    );
    let out = gpoly(&["verify", "pyr.json", "--checks", "joinunit"], tmp.path());
    assert_eq!(exit_code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["checks"][0]["status"], "fail");
    let failures = report["checks"][0]["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 2);
    assert!(failures[0].as_str().unwrap().contains("required [1]"));
}

#[test]
fn batch_over_a_directory() {
    let tmp = tempfile::tempdir().unwrap();
    for (args, name) in [
        (vec!["gen", "cube", "3"], "cube3.json"),
        (vec!["gen", "polygon", "5"], "pentagon.json"),
        (vec!["gen", "cross", "3"], "cross3.json"),
    ] {
        let mut full = args.clone();
        full.extend(["-o", name]);
        gpoly(&full, tmp.path());
    }
    let out = gpoly(
        &["batch", ".", "--checks", "kalai,nonneg,relnonneg", "--jobs", "2"],
        tmp.path(),
    );
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["summary"]["files"], 3);
    assert_eq!(report["summary"]["checks_run"], 9);
    assert_eq!(report["summary"]["failures"], 0);
    // Entries are ordered by file name, then requested check order.
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries[0]["file"], "cross3.json");
    assert_eq!(entries[0]["check"], "kalai");

    // Concurrency must not change a byte of the report.
    let again = gpoly(
        &["batch", ".", "--checks", "kalai,nonneg,relnonneg", "--jobs", "3"],
        tmp.path(),
    );
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn batch_records_errors_and_continues() {
    let tmp = tempfile::tempdir().unwrap();
    gpoly(&["gen", "cube", "2", "-o", "square.json"], tmp.path());
    std::fs::write(tmp.path().join("broken.json"), "{not json").unwrap();
    let out = gpoly(&["batch", ".", "--checks", "nonneg"], tmp.path());
    assert_eq!(exit_code(&out), 2);
    let report = stdout_json(&out);
    assert_eq!(report["summary"]["errors"], 1);
    assert_eq!(report["summary"]["checks_run"], 1);
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries[0]["file"], "broken.json");
    assert_eq!(entries[0]["status"], "error");
}

#[test]
fn batch_of_an_empty_directory_succeeds() {
    let tmp = tempfile::tempdir().unwrap();
    let out = gpoly(&["batch", "."], tmp.path());
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["summary"]["files"], 0);
    assert_eq!(report["entries"], serde_json::json!([]));
}

#[test]
fn guardrails_refuse_oversized_input() {
    let tmp = tempfile::tempdir().unwrap();
    let rows: Vec<Vec<i64>> = (0..65).map(|i| vec![i, i * i]).collect();
    std::fs::write(
        tmp.path().join("big.json"),
        serde_json::to_string(&serde_json::json!({"name": "big", "vertices": rows})).unwrap(),
    )
    .unwrap();
    let out = gpoly(&["compute", "big.json"], tmp.path());
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
    // Forcing lets the (valid, parabola-shaped) polygon through.
    let out = gpoly(&["compute", "big.json", "--force"], tmp.path());
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["g"], serde_json::json!([1, 62]));
}

#[test]
fn malformed_coordinates_exit_2() {
    let tmp = tempfile::tempdir().unwrap();
    std::fs::write(
        tmp.path().join("bad.json"),
        r#"{"name": "bad", "vertices": [["1/0"], ["2"]]}"#,
    )
    .unwrap();
    let out = gpoly(&["compute", "bad.json"], tmp.path());
    assert_eq!(exit_code(&out), 2);

    std::fs::write(
        tmp.path().join("dup.json"),
        r#"{"name": "dup", "vertices": [["0"], ["0"]]}"#,
    )
    .unwrap();
    let out = gpoly(&["compute", "dup.json"], tmp.path());
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn gen_writes_to_stdout_when_unredirected() {
    let tmp = tempfile::tempdir().unwrap();
    let out = gpoly(&["gen", "polygon", "5"], tmp.path());
    assert_eq!(exit_code(&out), 0);
    let file: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(file["name"], "polygon5");
    assert_eq!(file["vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn memo_limit_env_is_accepted() {
    let tmp = tempfile::tempdir().unwrap();
    gpoly(&["gen", "cube", "3", "-o", "cube3.json"], tmp.path());
    let out = Command::new(env!("CARGO_BIN_EXE_gpoly"))
        .args(["compute", "cube3.json"])
        .env("GPOLY_MEMO_LIMIT", "4")
        .current_dir(tmp.path())
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["g"], serde_json::json!([1, 4]));
}

#[test]
fn reports_are_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    gpoly(&["gen", "prism", "polygon", "5", "-o", "p.json"], tmp.path());
    let a = gpoly(&["verify", "p.json", "--checks", "all"], tmp.path());
    let b = gpoly(&["verify", "p.json", "--checks", "all"], tmp.path());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(exit_code(&a), 0);
}
