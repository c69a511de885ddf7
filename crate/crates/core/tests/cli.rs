//! End-to-end runs of the binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn knotshake(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotshake")).args(args).output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).display().to_string()
}

#[test]
fn shake_exit_codes() {
    let o = knotshake(&["shake", "sum(twist(1),twist(1))", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["verdict"], json!(false));
    assert_eq!(v["conditions"]["i"]["datum"]["branched_order"], json!(25));
    let o = knotshake(&["shake", "sum(twist(1),twist(1))", "--n", "2", "--fail-on-obstructed"]);
    assert_eq!(o.status.code(), Some(3));
    let o = knotshake(&["shake", "U", "--n", "7"]);
    assert_eq!(stdout_json(&o)["verdict"], json!(true));
}

#[test]
fn usage_and_computation_errors() {
    assert_eq!(knotshake(&["shake", "U"]).status.code(), Some(1));
    assert_eq!(knotshake(&[]).status.code(), Some(1));
    let o = knotshake(&["invariants", "T(2,4)"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout_json(&o)["error"]["message"], json!("torus parameters not coprime: this is a link"));
    let o = knotshake(&["witness", "T(2,3)", "--g", "1", "--h", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout_json(&o)["error"]["kind"], json!("parity_obstruction"));
}

#[test]
fn cable_pair_value_at_one_root() {
    let o = knotshake(&["casson-gordon", "cable(3,76;T(5,6))", "--n", "224", "--k", "35"]);
    // 1 - (-64) - 2*35*189/224
    assert_eq!(stdout_json(&o), json!({ "value": "95/16" }));
}

#[test]
fn corpus_files_load() {
    let o = knotshake(&["invariants", &format!("seifert({})", corpus("seifert/figure_eight.json")), "--n", "2"]);
    assert_eq!(stdout_json(&o)["branched_order"], json!(5));
    let o = knotshake(&["multisig", "--form", &corpus("forms/t_plus_t3.json")]);
    assert_eq!(stdout_json(&o)["alpha"], json!([1, 0, -1, 0]));
    let knots = std::fs::read_to_string(corpus("knots.jsonl")).unwrap();
    for line in knots.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let e = knotshake::cli::parse_knot_expr(v["expr"].as_str().unwrap()).unwrap();
        assert_eq!(knotshake::cli::parse_knot_expr(&e.to_string()).unwrap(), e);
    }
}

#[test]
fn batch_reports_errors_inline() {
    let o = knotshake(&["batch", &corpus("batch.jsonl"), "--parallel", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let jobs = std::fs::read_to_string(corpus("batch.jsonl")).unwrap();
    assert_eq!(lines.len(), jobs.lines().count());
    assert_eq!(lines.iter().filter(|v| v.get("error").is_some()).count(), 1);
}
