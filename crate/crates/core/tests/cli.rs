use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn tscl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tscl"))
        .args(args)
        .output()
        .expect("tscl runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn first_line(args: &[&str]) -> String {
    let out = tscl(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out).lines().next().unwrap_or_default().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = tscl(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    tscl(args).status.code().unwrap()
}

#[test]
fn rot_values() {
    assert_eq!(first_line(&["rot", "--expr", "A"]), "0");
    assert_eq!(first_line(&["rot", "--expr", "R"]), "1/2");
    assert_eq!(first_line(&["rot", "--tree", "100|100|1"]), "1/2");
    assert_eq!(first_line(&["rot", "--expr", "R^3"]), "1/2");
}

#[test]
fn rot_certificate() {
    let out = stdout(&tscl(&["rot", "--expr", "R", "--certificate"]));
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "1/2");
    assert!(lines.contains(&"q 2"));
    assert!(lines.contains(&"p 1"));

    let v = json(&["rot", "--expr", "R", "--certificate"]);
    assert_eq!(v["value"], "1/2");
    assert_eq!(v["certificate"]["q"], "2");
    assert_eq!(v["certificate"]["p"], "1");
    assert!(v["certificate"]["witness"].is_string());
}

#[test]
fn json_without_certificate_has_only_value() {
    let v = json(&["rot", "--expr", "A"]);
    assert_eq!(v, serde_json::json!({ "value": "0" }));
}

#[test]
fn phi_and_scl() {
    assert_eq!(
        first_line(&["phi", "--n", "12", "--expr", "R", "--j", "-6"]),
        "0"
    );
    assert_eq!(
        first_line(&["phi", "--n", "12", "--expr", "R", "--j", "1"]),
        "7"
    );
    assert_eq!(
        first_line(&["scl", "--group", "t-star", "--word", "sigma_1"]),
        "1/24"
    );
    assert_eq!(
        first_line(&["scl", "--group", "t-sharp", "--word", "sigma_1"]),
        "1/42"
    );
    assert_eq!(
        first_line(&["scl", "--group", "tn:5", "--word", "sigma_2^3"]),
        "3/10"
    );
    assert_eq!(
        first_line(&["scl", "--group", "t-star", "--word", "rho"]),
        "1/4"
    );
}

#[test]
fn realize_round_trip_through_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.json");
    let path_str = path.to_str().unwrap();
    let v = json(&["realize", "--q", "1/7", "--n", "12", "--emit", path_str]);
    assert_eq!(v["value"], "1/7");
    assert_eq!(v["certificate"]["verified_phi"], "24/7");
    assert_eq!(v["certificate"]["element"]["j"], 3);

    let written: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, v["certificate"]["element"]);

    let circle = dir.path().join("t.json");
    fs::write(&circle, written["t"].to_string()).unwrap();
    assert_eq!(
        first_line(&["rot", "--element", circle.to_str().unwrap()]),
        "1/28"
    );
}

#[test]
fn compose_and_eval() {
    assert_eq!(
        first_line(&["compose", "--expr", "A A^-1"]),
        r#"{"breakpoints":[["0","0"]]}"#
    );
    assert_eq!(first_line(&["eval", "--expr", "A", "--at", "1/2"]), "1/4");
    assert_eq!(first_line(&["eval", "--expr", "R R", "--at", "1/3"]), "1/3");
}

#[test]
fn check_table_reports_failures() {
    let dir = TempDir::new().unwrap();
    let good = dir.path().join("good.json");
    fs::write(
        &good,
        r#"{"n": 12, "generators": {"x": {"n": 12, "t": "A", "j": 0}, "y": {"n": 12, "t": "A^-1", "j": 0}},
            "relators": ["x y"]}"#,
    )
    .unwrap();
    assert_eq!(
        first_line(&["check-table", "--table", good.to_str().unwrap()]),
        "ok"
    );

    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"n": 12, "generators": {"x": {"n": 12, "t": "A", "j": 0}}, "relators": ["x"]}"#,
    )
    .unwrap();
    let out = tscl(&["check-table", "--table", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out).lines().collect::<Vec<_>>(),
        ["failed", "relator x"]
    );
}

#[test]
fn scl_with_table() {
    let dir = TempDir::new().unwrap();
    let table = dir.path().join("t.json");
    fs::write(
        &table,
        r#"{"n": 12, "generators": {"z": {"n": 12, "t": {"breakpoints": [["0", "0"]]}, "j": "1"}}}"#,
    )
    .unwrap();
    let path = table.to_str().unwrap();
    assert_eq!(
        first_line(&["scl", "--table", path, "--word", "z^2"]),
        "1/12"
    );
    assert_eq!(
        first_line(&["scl", "--group", "t-star", "--table", path, "--word", "z"]),
        "1/24"
    );
    assert_eq!(
        exit_code(&["scl", "--group", "t-sharp", "--table", path, "--word", "z"]),
        4
    );
}

#[test]
fn verify_runs() {
    let out = tscl(&[
        "verify",
        "--suite",
        "arith",
        "--samples",
        "3",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.lines().all(|l| l.starts_with("PASS") || l == "pass"),
        "{text}"
    );
    assert_eq!(text.lines().last(), Some("pass"));

    let out = tscl(&["verify", "--suite", "arith", "--samples", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("warning"));

    let v = json(&["verify", "--suite", "word", "--samples", "2"]);
    assert_eq!(v["value"], "pass");
    assert!(!v["certificate"]["properties"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn error_classes() {
    // parse
    assert_eq!(exit_code(&["rot", "--tree", "10|1|0"]), 2);
    assert_eq!(
        exit_code(&["scl", "--group", "t-star", "--word", "sigma_1^"]),
        2
    );
    assert_eq!(exit_code(&["eval", "--expr", "A", "--at", "1/0"]), 2);
    // budget
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.json");
    let g_str = g.to_str().unwrap();
    assert!(
        tscl(&["realize", "--q", "1/5", "--n", "21", "--emit", g_str])
            .status
            .success()
    );
    let element: Value = serde_json::from_str(&fs::read_to_string(&g).unwrap()).unwrap();
    let circle = dir.path().join("t.json");
    fs::write(&circle, element["t"].to_string()).unwrap();
    let c = circle.to_str().unwrap();
    assert_eq!(first_line(&["rot", "--element", c]), "2/105");
    assert_eq!(exit_code(&["--budget", "3", "rot", "--element", c]), 3);
    assert_eq!(exit_code(&["--denom-cap", "10", "rot", "--element", c]), 3);
    // missing file and unknown names are generic failures
    assert_eq!(exit_code(&["rot", "--element", "/nonexistent/x.json"]), 1);
    assert_eq!(exit_code(&["rot", "--expr", "Q"]), 1);

    let out = tscl(&["--budget", "3", "rot", "--element", c]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error[budget]:"), "{err}");
}
