//! End-to-end checks of the command-line surface: golden outputs, exit
//! codes, and input validation.

use std::process::{Command, Output};

fn hyperchen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperchen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = hyperchen(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

const MODEL: &str = r#"{
  "dim": 2,
  "H": [["0,1", "2"], ["-1/2,0,3", "0"]],
  "P": [1, 0],
  "lower": "-1",
  "upper": "0"
}"#;

fn model_file(dir: &tempfile::TempDir) -> String {
    let path = dir.path().join("model.json");
    std::fs::write(&path, MODEL).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn printed_convolution_product() {
    let v = stdout_json(&["conv", "2 3 1", "1"]);
    assert_eq!(v["degree"], 4);
    let perms: Vec<&str> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["perm"].as_str().unwrap())
        .collect();
    assert_eq!(perms, vec!["2 3 1 4", "2 4 1 3", "3 4 1 2", "3 4 2 1"]);
    assert!(v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .all(|t| t["coef"] == "1"));
}

#[test]
fn printed_regression_free_basis() {
    let v = stdout_json(&["basis", "R", "2", ""]);
    let perms: Vec<&str> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["perm"].as_str().unwrap())
        .collect();
    assert_eq!(perms, vec!["1 2", "-1 2", "2 -1", "-2 -1"]);
}

#[test]
fn perm_subcommands() {
    assert_eq!(
        stdout_json(&["perm", "compose", "-3 1 -2", "2 -3 1"])["perm"],
        "1 2 -3"
    );
    assert_eq!(stdout_json(&["perm", "inverse", "2 3 1"])["perm"], "3 1 2");
    assert_eq!(
        stdout_json(&["perm", "standardize", "5 8 2"])["perm"],
        "2 3 1"
    );
    assert_eq!(
        stdout_json(&["perm", "standardize", "-2 7 -1 2", "--ties"])["perm"],
        "-2 4 -1 3"
    );
    assert_eq!(
        stdout_json(&["perm", "regressions", "4 -3 -5 6 -2 1"])["set"],
        serde_json::json!([2, 5])
    );
    assert_eq!(
        stdout_json(&["perm", "descents", "2 3 1"])["set"],
        serde_json::json!([2])
    );
}

#[test]
fn eval_and_dump_against_model_file() {
    let dir = tempfile::tempdir().unwrap();
    let model = model_file(&dir);
    let dumped = stdout_json(&["dump", "--model", &model]);
    assert_eq!(dumped["dim"], 2);
    assert_eq!(dumped["lower"], "-1");

    let picard = stdout_json(&["eval", "picard", "--model", &model, "--order", "2"]);
    assert_eq!(
        picard["terms"][0],
        serde_json::json!([["1", "0"], ["0", "1"]])
    );

    // [^1] equals the plain integral of H over the window
    let bracket = stdout_json(&["eval", "bracket", "--model", &model, "--word", "^1"]);
    assert_eq!(bracket["matrix"], picard["terms"][1]);

    let angle = stdout_json(&["eval", "angle", "--model", &model, "--perm", "1"]);
    assert!(angle["matrix"].is_array());

    let composite = stdout_json(&[
        "eval",
        "composite",
        "--model",
        &model,
        "--head",
        "2 -1",
        "--tail",
        "1",
    ]);
    assert!(composite["matrix"].is_array());
}

#[test]
fn basis_id_echo_is_canonical() {
    let out = hyperchen(&["basis-id", r#"{"S":[1],"n":3,"family":"T"}"#]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let compact: String = text.split_whitespace().collect();
    assert_eq!(compact, r#"{"family":"T","n":3,"S":[1]}"#);
}

#[test]
fn verify_suite_exit_codes() {
    let ok = hyperchen(&["verify", "sol"]);
    assert_eq!(ok.status.code(), Some(0));
    let unknown = hyperchen(&["verify", "nonsense"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hyperchen(&["conv", "2 2 1", "1"]).status.code(), Some(2));
    assert_eq!(
        hyperchen(&["perm", "descents", "2 -3 1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hyperchen(&["perm", "standardize", "2 7 1 2"]).status.code(),
        Some(2)
    );
    assert_eq!(hyperchen(&["basis", "Q", "2", ""]).status.code(), Some(2));
    assert_eq!(hyperchen(&["basis", "R", "7", ""]).status.code(), Some(2));
    assert_eq!(
        hyperchen(&["omega", "--max-degree", "9", "--allow-degree-7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hyperchen(&["eval", "angle", "--model", "/no/such/file", "--perm", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hyperchen(&["no-such-verb"]).status.code(), Some(2));
}

#[test]
fn verify_accepts_a_model_file() {
    let dir = tempfile::tempdir().unwrap();
    let model = model_file(&dir);
    for suite in ["gl", "recursion", "magnus", "bch", "chen"] {
        let out = hyperchen(&[
            "verify",
            suite,
            "--model",
            &model,
            "--max-total-degree",
            "3",
        ]);
        assert_eq!(out.status.code(), Some(0), "suite {suite}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["passed"], true, "suite {suite}");
    }
}

#[test]
fn window_flags_accept_rationals() {
    let out = hyperchen(&[
        "verify",
        "recursion",
        "--models",
        "1",
        "--lower",
        "-1/2",
        "--upper",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_model_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"dim": 2, "H": [["0"]], "P": [1, 0], "lower": "0", "upper": "1"}"#,
    )
    .unwrap();
    let out = hyperchen(&["dump", "--model", &path.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(
        &path,
        r#"{"dim": 2, "H": [["0","0"],["0","0"]], "P": [2, 0], "lower": "0", "upper": "1"}"#,
    )
    .unwrap();
    let out = hyperchen(&["dump", "--model", &path.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(
        &path,
        r#"{"dim": 2, "H": [["0","0"],["0","0"]], "P": [1, 0], "lower": "1", "upper": "0"}"#,
    )
    .unwrap();
    let out = hyperchen(&["dump", "--model", &path.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
}
