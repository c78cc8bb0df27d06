use std::process::{Command, Output};

use phi4_core::classifier::{classify, consistency_check, ClassificationReport};
use phi4_core::frobenius::{sample_density, SampleReport};
use phi4_core::padic_local::LocalReport;
use phi4_core::polyring::{parse_rat, rat};
use serde_json::Value;

fn phi4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phi4"))
        .args(args)
        .env_remove("PHI4_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = phi4(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_json_round_trips() {
    for c in ["19/16", "1", "-1/8", "-8/3", "-31/48", "0", "7/5"] {
        let text = stdout(&["classify", "--c", c, "--format", "json"]);
        let parsed: ClassificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, classify(&parse_rat(c).unwrap()).unwrap().with_approx());
        let reprinted = serde_json::to_string_pretty(&serde_json::to_value(&parsed).unwrap()).unwrap();
        assert_eq!(reprinted.trim_end(), text.trim_end());
    }
}

#[test]
fn classify_verify_includes_cross_check() {
    let text = stdout(&["classify", "--c", "-155/72", "--verify", "--format", "json"]);
    let parsed: ClassificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed, consistency_check(&rat(-155, 72)).unwrap().with_approx());
    assert!(parsed.cross_check.unwrap().types_agree);
}

#[test]
fn published_examples() {
    let text = stdout(&["classify", "--c", "19/16", "--format", "json"]);
    assert!(text.contains(r#""density": "27/64""#));
    let text = stdout(&["classify", "--c", "1"]);
    assert!(text.contains("GenericW") && text.contains("85/384"));
    let text = stdout(&["classify", "--f", "x^2+2*x", "--format", "json"]);
    let parsed: ClassificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.c, rat(0, 1));
    assert_eq!(parsed.density, rat(1, 4));
    assert!(parsed.conjugator.is_some());
}

#[test]
fn keys_are_sorted() {
    let text = stdout(&["classify", "--c", "-5/4", "--verify", "--format", "json"]);
    let keys: Vec<String> = match serde_json::from_str::<Value>(&text).unwrap() {
        Value::Object(map) => map.keys().cloned().collect(),
        _ => panic!("object expected"),
    };
    let top: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
    assert_eq!(top, keys);
}

#[test]
fn dynatomic_text() {
    assert_eq!(stdout(&["dynatomic", "--n", "1"]).trim(), "x^2 - x + t");
    assert_eq!(stdout(&["dynatomic", "--n", "4", "--c", "0"]).trim(), "x^12 + x^9 + x^6 + x^3 + 1");
    let generic = stdout(&["dynatomic", "--n", "4"]);
    assert!(generic.starts_with("x^12 + 6*t*x^10 + x^9"));
    assert!(generic.trim_end().ends_with("t^6 + 3*t^5 + 3*t^4 + 3*t^3 + 2*t^2 + 1"));
}

#[test]
fn density_of_each_group() {
    assert_eq!(stdout(&["density", "--group", "W"]).trim(), "85/384");
    assert_eq!(stdout(&["density", "--group", "G"]).trim(), "43/192");
    assert_eq!(stdout(&["density", "--group", "H"]).trim(), "53/128");
    assert_eq!(stdout(&["density", "--group", "I"]).trim(), "39/64");
}

#[test]
fn localsolve_verdicts() {
    let f = "x^8-8*x^5+2*x^4+8*x^3+1";
    let text = stdout(&["localsolve", "--f", f, "--twist", "2", "--p", "2"]);
    assert_eq!(text.lines().next(), Some("empty"));
    let text = stdout(&["localsolve", "--f", f, "--twist", "17", "--p", "2"]);
    assert_eq!(text.lines().next(), Some("points"));
    let json = stdout(&["localsolve", "--f", f, "--twist", "17", "--p", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["verdict"], "empty");
    let cert: LocalReport = serde_json::from_value(v["certificate"].clone()).unwrap();
    assert!(!cert.solvable);
    assert_eq!(serde_json::to_value(&cert).unwrap(), v["certificate"]);
}

#[test]
fn sample_json_round_trips() {
    let text = stdout(&["sample", "--c", "-8/3", "--bound", "2000", "--format", "json"]);
    let parsed: SampleReport = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed, sample_density(&rat(-8, 3), 2000).unwrap().with_approx());
}

#[test]
fn selfcheck_passes() {
    let out = phi4(&["selfcheck", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v.as_array().unwrap();
    assert!(checks.len() >= 9);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["classify", "--c", "1/0"],
        vec!["classify", "--c", "one"],
        vec!["classify"],
        vec!["classify", "--c", "1", "--f", "x^2"],
        vec!["classify", "--f", "x + 1"],
        vec!["dynatomic", "--n", "0"],
        vec!["sample", "--c", "1", "--bound", "50"],
        vec!["localsolve", "--f", "(x - 1)^2", "--p", "3"],
        vec!["localsolve", "--f", "x^2 + 1", "--p", "9"],
        vec!["localsolve", "--f", "x^2 + 1", "--p", "3", "--twist", "4"],
        vec!["density", "--group", "Q"],
        vec!["frobnicate"],
    ] {
        assert_eq!(phi4(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verification_failure_exits_one() {
    // a depth cap of zero cannot settle anything, so the local search fails
    let out = phi4(&["localsolve", "--f", "x^8-8*x^5+2*x^4+8*x^3+1", "--twist", "2", "--p", "2", "--depth-cap", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seed_flag_and_environment_agree() {
    let flag = stdout(&["classify", "--c", "-2", "--verify", "--seed", "11", "--format", "json"]);
    let env = Command::new(env!("CARGO_BIN_EXE_phi4"))
        .args(["classify", "--c", "-2", "--verify", "--format", "json"])
        .env("PHI4_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), flag);
}

#[test]
fn tsv_has_header_and_row() {
    let text = stdout(&["classify", "--c", "-31/48", "--format", "tsv"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].split('\t').count(), lines[1].split('\t').count());
    assert!(lines[1].contains("RhoI") && lines[1].contains("39/64"));
}
