use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn covreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covreg"))
        .args(args)
        .env_remove("COVREG_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn reg_of_square_powers() {
    let out = covreg(&["reg", "cycle:4", "--power", "2", "--symbolic"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["value"], 5);
    let out = covreg(&["reg", "cycle:3", "-t", "2", "--witness"]);
    let v = json(&out);
    assert_eq!(v["value"], 4);
    assert_eq!(v["witness"]["contribution"], 2);
}

#[test]
fn reduce_examples() {
    let v = json(&covreg(&["reduce", "figure2"]));
    assert_eq!(v["verdict"], "not reducible");
    let v = json(&covreg(&["reduce", "figure1", "--trace"]));
    assert_eq!(v["reducible"], true);
    assert!(v["trace"]["moves"].as_array().unwrap().len() >= 2);
}

#[test]
fn verify_cycles_passes() {
    let out = covreg(&["verify", "cycles", "--max-n", "7", "--max-t", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn failed_verification_exits_one() {
    let out = covreg(&["verify", "cycle-invariants", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
}

#[test]
fn input_and_capacity_exit_codes() {
    assert_eq!(covreg(&["tau-max", "cycle:2"]).status.code(), Some(2));
    assert_eq!(covreg(&["tau-max", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(covreg(&["verify", "lemma", "reduction-9"]).status.code(), Some(2));
    assert_eq!(covreg(&["reg", "cycle:15"]).status.code(), Some(3));
    assert_eq!(covreg(&["reg", "cycle:5", "-t", "5"]).status.code(), Some(3));
}

#[test]
fn stdin_documents() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_covreg"))
        .args(["hdim", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"name":"c5","vertices":[1,2,3,4,5],"edges":[[1,2],[2,3],[3,4],[4,5],[1,5]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let v = json(&out);
    assert_eq!(v["graph"], "c5");
    assert_eq!(v["hdim"], 1);
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify", "theorem1", "--instances", "8", "--max-vertices", "8", "--seed", "5"];
    let a = covreg(&args);
    let b = covreg(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["inputsDigest"].as_str().unwrap().len(), 64);
    assert!(v.get("timingMs").is_none());
    let timed = json(&covreg(&["verify", "figures", "--timing"]));
    assert!(timed["timingMs"].is_u64());
}

#[test]
fn generated_documents_round_trip() {
    let out = covreg(&["gen", "random-unicyclic", "9", "4", "--seed", "3"]);
    let doc = json(&out);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 9);
    let path = std::env::temp_dir().join(format!("covreg-gen-{}.json", std::process::id()));
    std::fs::write(&path, &out.stdout).unwrap();
    let v = json(&covreg(&["tau-max", path.to_str().unwrap()]));
    std::fs::remove_file(&path).ok();
    let same = json(&covreg(&["tau-max", "random-unicyclic:9:4:3"]));
    assert_eq!(v["tauMax"], same["tauMax"]);
    assert_eq!(json(&covreg(&["delta", "cycle:5"]))["delta"], "3");
}
