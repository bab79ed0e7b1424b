use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;
use subword_core::{occ_dp, OccCount, Word};

fn subword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subword")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = subword(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn count(v: &Value, key: &str) -> OccCount {
    v["results"][key].as_str().expect("decimal string").parse().expect("integer")
}

#[test]
fn occ_examples() {
    assert_eq!(json(&["occ", "011001", "01"])["results"]["count"], "5");
    assert_eq!(json(&["occ", "0", ""])["results"]["count"], "1");
    assert_eq!(json(&["occ", "01", "011"])["results"]["count"], "0");
    let v = json(&["occ", "0:2,3", "1:2", "--algo", "runs"]);
    assert_eq!(v["inputs"]["word"], "00111");
    assert_eq!(v["results"]["count"], "3");
}

#[test]
fn large_counts_are_decimal_strings() {
    let w = "0".repeat(100);
    let u = "0".repeat(50);
    let v = json(&["occ", &w, &u, "--algo", "both"]);
    assert_eq!(v["results"]["agree"], true);
    assert_eq!(count(&v, "count"), subword_core::binomial(100, 50));
    assert_eq!(v["results"]["count"], "100891344545564193334812497256");
}

#[test]
fn exit_codes() {
    assert_eq!(subword(&["occ", "012", "0"]).status.code(), Some(2));
    assert_eq!(subword(&["occ", "0:0,1", "0"]).status.code(), Some(2));
    assert_eq!(subword(&["minentropy", "0"]).status.code(), Some(2));
    assert_eq!(subword(&["nonsense"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_subword"))
        .args(["gf", "01", "0101"])
        .env("SUBWORD_MAX_V_LEN", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    let budget = Command::new(env!("CARGO_BIN_EXE_subword"))
        .args(["gf", "0011", "01", "--verify"])
        .env("SUBWORD_SERIES_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(budget.status.code(), Some(2));
}

#[test]
fn maxocc_and_bounds() {
    let v = json(&["maxocc", "01110"]);
    assert_eq!(v["results"]["maxocc"], "3");
    assert_eq!(v["results"]["witnesses"], serde_json::json!(["010", "0110"]));
    assert_eq!(v["results"]["entropy"], 1.585);
    let v = json(&["maxocc", "0110001110", "--engine", "runs"]);
    assert_eq!(v["results"]["maxocc"], "22");
    let v = json(&["bounds", "14"]);
    assert_eq!(v["results"]["lower_ceil"], "63");
    assert_eq!(v["results"]["upper"], "3432");
}

#[test]
fn table_rows() {
    let out = subword(&["table", "--from", "1", "--to", "9", "--verify"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,words,maxocc,entropy,entropy_per_letter,runs");
    assert_eq!(lines[3], "3,001 010,2,1.000,0.333,2 3");
    assert_eq!(lines[9], "9,011000110,16,4.000,0.444,5");
    let v = json(&["table", "--from", "10", "--to", "11", "--format", "json"]);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows[0]["min_maxocc"], "22");
    assert_eq!(rows[1]["matches_published"], true);
}

#[test]
fn minentropy_three_has_two_classes() {
    let v = json(&["minentropy", "3", "--threads", "2"]);
    assert_eq!(v["results"]["min_maxocc"], "2");
    assert_eq!(v["results"]["achievers"].as_array().unwrap().len(), 2);
    let unpruned = json(&["minentropy", "3", "--no-hints", "--no-symmetry"]);
    assert_eq!(unpruned["results"]["achievers"], v["results"]["achievers"]);
}

#[test]
fn timeout_then_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("search.json");
    let cp = cp.to_str().unwrap();
    let out = subword(&["minentropy", "21", "--checkpoint", cp, "--timeout", "0", "--chunk-size", "64"]);
    assert_eq!(out.status.code(), Some(3));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(cp).unwrap()).unwrap();
    assert_eq!(saved["version"], 1);
    assert_eq!(saved["n"], 21);

    let out = subword(&["minentropy", "12", "--checkpoint", cp, "--resume"]);
    assert_eq!(out.status.code(), Some(1), "checkpoint for another length is rejected");

    let small = dir.path().join("small.json");
    let small = small.to_str().unwrap();
    assert_eq!(subword(&["minentropy", "12", "--checkpoint", small, "--timeout", "0"]).status.code(), Some(3));
    let resumed = json(&["minentropy", "12", "--checkpoint", small, "--resume"]);
    let fresh = json(&["minentropy", "12"]);
    assert_eq!(resumed["results"]["min_maxocc"], "52");
    assert_eq!(resumed["results"]["achievers"], fresh["results"]["achievers"]);
}

#[test]
fn generating_function() {
    let out = subword(&["gf", "0011", "01", "--verify", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(1 - x) / (1 - 2*x + x^2 - 4*x*y)\nverify: pass\n");
    let v = json(&["gf", "01", "01", "--series", "3", "3"]);
    assert_eq!(v["results"]["series"][3], serde_json::json!(["1", "6", "5", "1"]));
    let f: subword_core::genfunc::RationalGF = v["results"]["gf"].as_str().unwrap().parse().unwrap();
    let g: subword_core::genfunc::RationalGF = serde_json::from_value(v["results"]["coefficients"].clone()).unwrap();
    assert_eq!(f, g);
}

#[test]
fn heuristic_and_extend() {
    let a = json(&["heuristic", "12", "--seed", "7"]);
    let b = json(&["heuristic", "12", "--seed", "7"]);
    assert_eq!(a["results"], b["results"]);
    assert!(count(&a, "maxocc").to_u64().unwrap() >= 52);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("words.txt");
    std::fs::write(&file, "# best words of length 4\n0110\n\n1001\n").unwrap();
    let v = json(&["extend", "--from-file", file.to_str().unwrap()]);
    assert_eq!(v["results"]["word"].as_str().unwrap().len(), 5);
    assert_eq!(v["results"]["maxocc"], "3");
    assert_eq!(subword(&["extend", "01", "011"]).status.code(), Some(2));
}

fn word_strategy(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('0'), Just('1')], 0..=max).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn both_algorithms_agree_and_round_trip(w in word_strategy(24), u in word_strategy(8)) {
        let v = json(&["occ", &w, &u, "--algo", "both"]);
        prop_assert_eq!(&v["results"]["agree"], &Value::Bool(true));
        let expect = occ_dp(&w.parse::<Word>().unwrap(), &u.parse::<Word>().unwrap());
        prop_assert_eq!(count(&v, "count"), expect);
        let again: Value = serde_json::from_str(&v.to_string()).unwrap();
        prop_assert_eq!(again, v);
    }
}
