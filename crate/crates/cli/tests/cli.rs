use std::process::{Command, Output};

use serde_json::Value;

fn su2c(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_su2c")).args(args).output().expect("su2c runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn conjecture_report() {
    let out = su2c(&["conjecture", "1/2", "1/2", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verified"], true);
    let data = &v["results"][0]["data"];
    assert_eq!((data["lower"].as_u64(), data["upper"].as_u64(), data["target"].as_u64()), (Some(5), Some(5), Some(5)));
    assert_eq!(v["results"][0]["status"], "verified");
    assert!(v["results"][0].get("elapsed_ms").is_none());
}

#[test]
fn dimension_and_spin_forms() {
    let v = json(&su2c(&["dim", "2", "1", "1"]));
    assert_eq!(v["results"][0]["data"]["dim"], 19);
    let v = json(&su2c(&["dim", "1.5", "3/2", "1.5"]));
    assert_eq!(v["results"][0]["data"]["dim"], 34);
    assert_eq!(v["inputs"]["spins"][0], "3/2");
}

#[test]
fn text_format() {
    let out = su2c(&["--format", "text", "dim", "1/2", "1", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("VERIFIED"));
    assert!(text.contains("\"dim\":9"));
    assert!(text.ends_with("verified: true\n"));
}

#[test]
fn isomorphisms() {
    for target in ["tl", "brauer", "btl:1", "bb"] {
        let out = su2c(&["iso", target]);
        assert_eq!(out.status.code(), Some(0), "{target}");
        assert_eq!(json(&out)["verified"], true, "{target}");
    }
}

#[test]
fn errors_and_exit_codes() {
    let out = su2c(&["hjk", "1/2", "1/2", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["results"][0]["status"], "error");

    let out = su2c(&["dim", "5", "1", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));

    assert_eq!(su2c(&["--cap", "10", "dim", "1", "1", "1"]).status.code(), Some(1));
    assert_eq!(su2c(&["dim", "1/3", "1", "1"]).status.code(), Some(1));
    assert_eq!(su2c(&["--help"]).status.code(), Some(0));
}

#[test]
fn low_degree_budget_is_inconclusive() {
    let out = su2c(&["--lmax", "4", "conjecture", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["verified"], false);
    assert_eq!(v["inconclusive"][0], "conjecture");
}

#[test]
fn timing_is_opt_in() {
    let v = json(&su2c(&["--timing", "dim", "1", "1", "1"]));
    assert!(v["results"][0]["elapsed_ms"].is_u64());
}

#[test]
fn full_suite_is_verified_and_deterministic() {
    let first = su2c(&["paper-suite"]);
    assert_eq!(first.status.code(), Some(0));
    let v = json(&first);
    assert_eq!(v["verified"], true);
    let results = v["results"].as_array().unwrap();
    assert!(results.len() > 50);
    assert!(results.iter().all(|r| r["status"] == "verified"));
    assert_eq!(su2c(&["paper-suite"]).stdout, first.stdout);
}
