use std::path::PathBuf;
use std::process::{Command, Output};

fn dscop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dscop")).args(args).env_remove("DSCOP_DEGREE").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dscop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(dscop(&[]).status.code(), Some(2));
    assert_eq!(dscop(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(dscop(&["solve", "--mu", "abc"]).status.code(), Some(2));
    assert_eq!(dscop(&["verify", "--suite", "gamma", "--assoc", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(dscop(&["--help"]).status.code(), Some(0));
}

#[test]
fn solve_prints_canonical_coefficient() {
    let o = dscop(&["solve", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["mu"], "1");
    assert_eq!(j["degree"], 3);
    let terms = j["terms"].as_array().unwrap();
    let e0e1 = terms.iter().find(|t| t["word"] == serde_json::json!(["e0", "e1"])).unwrap();
    assert_eq!(e0e1["coeff"], "1/24");
}

#[test]
fn env_var_sets_degree() {
    let o = Command::new(env!("CARGO_BIN_EXE_dscop")).args(["solve", "--mu", "2"]).env("DSCOP_DEGREE", "2").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["degree"], 2);
}

#[test]
fn exported_associator_round_trips_through_verify() {
    let o = dscop(&["solve", "--degree", "4", "--mu", "-2/3"]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("assoc.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let p = path.to_str().unwrap();
    let loaded = dscop(&["verify", "--suite", "dmr", "--degree", "4", "--assoc", p]);
    let fresh = dscop(&["verify", "--suite", "dmr", "--degree", "4", "--mu", "-2/3"]);
    assert_eq!(loaded.status.code(), Some(0));
    assert_eq!(stdout(&loaded), stdout(&fresh));
    let j: serde_json::Value = serde_json::from_str(&stdout(&loaded)).unwrap();
    assert_eq!(j["mu"], "-2/3");
    assert_eq!(j["passed"], true);
    assert_eq!(dscop(&["verify", "--suite", "gamma", "--degree", "5", "--assoc", p]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_1() {
    let o = dscop(&["solve", "--degree", "3"]);
    let mut j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for t in j["terms"].as_array_mut().unwrap() {
        if t["word"] == serde_json::json!(["e0", "e1"]) {
            t["coeff"] = "1/12".into();
        }
    }
    let path = scratch("broken.json");
    std::fs::write(&path, j.to_string()).unwrap();
    let v = dscop(&["verify", "--suite", "assoc-residuals", "--degree", "3", "--assoc", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1));
    let r: serde_json::Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(r["passed"], false);
    assert!(!r["failures"].as_array().unwrap().is_empty());
}

#[test]
fn dumps() {
    let o = dscop(&["dump", "varpi-e12", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[ e12 + e25 | -e15 | 0 ]\n[ -e25 | e12 + e15 | 0 ]\n[ 0 | 0 | e12 ]\n\n");
    let o = dscop(&["dump", "gamma", "--degree", "4"]);
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["coefficients"], serde_json::json!(["1", "0", "-1/48", "0", "1/2560"]));
    let o = dscop(&["dump", "pr-table"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| !l.is_empty()).count(), 4);
}

#[test]
fn convert_round_trip() {
    let path = scratch("series.txt");
    std::fs::write(&path, "1 + 1/24*e0.e1 - 1/24*e1.e0").unwrap();
    let o = dscop(&["convert", path.to_str().unwrap(), "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let json = scratch("series.json");
    std::fs::write(&json, &o.stdout).unwrap();
    let back = dscop(&["convert", json.to_str().unwrap(), "--to", "text"]);
    assert_eq!(stdout(&back).trim(), "1 + 1/24*e0.e1 - 1/24*e1.e0");
    std::fs::write(&path, "1 + e0.e0.e0.e0").unwrap();
    assert_eq!(dscop(&["convert", path.to_str().unwrap(), "--degree", "3"]).status.code(), Some(2));
}

#[test]
fn verify_all_at_low_degree() {
    let o = dscop(&["verify", "--suite", "all", "--degree", "3", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = j.as_array().unwrap();
    assert_eq!(reports.len(), 17);
    assert!(reports.iter().all(|r| r["passed"] == true));
}
