use std::process::{Command, Output};

use fqt_core::congruence::ConditionSuiteDoc;
use fqt_core::factor::FactorizationDoc;
use fqt_core::survey::persist;
use fqt_core::survey::reproduce::CaseReport;
use fqt_core::survey::{ScanFindingDoc, SurveyRecord, Theorem7Report};
use serde_json::Value;

fn fqt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqt"))
        .args(args)
        .env_remove("CARLITZ_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = fqt(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn wilson_all_conditions() {
    let v = json(&[
        "check",
        "wilson",
        "--field",
        "3",
        "--prime",
        "t^3+2*t+2",
        "--all-conditions",
    ]);
    let doc: ConditionSuiteDoc = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(doc.verdicts.len(), 15);
    assert!(doc.verdicts.values().all(|b| *b));
    assert!(doc.unanimous);
    assert_eq!(v["multiplicity"]["value"], 2);
}

#[test]
fn wilson_over_f2_is_definition_only() {
    let v = json(&[
        "check",
        "wilson",
        "--field",
        "2",
        "--prime",
        "t^2+t+1",
        "--all-conditions",
    ]);
    let doc: ConditionSuiteDoc = serde_json::from_value(v).unwrap();
    assert_eq!(doc.verdicts.len(), 1);
    assert_eq!(doc.skipped.len(), 14);
}

#[test]
fn wieferich_check() {
    let v = json(&[
        "check",
        "wieferich",
        "--field",
        "3",
        "--prime",
        "t^2+1",
        "--base",
        "t^3",
    ]);
    let doc: ConditionSuiteDoc = serde_json::from_value(v).unwrap();
    assert_eq!(doc.verdicts.len(), 6);
    assert!(doc.verdicts.values().all(|b| *b));
}

#[test]
fn classify_base_witness() {
    let v = json(&["classify-base", "--field", "3", "--base", "t^3+2*t"]);
    assert_eq!(v["tag"], "NoWieferichPrimes");
    assert_eq!(v["witness"]["b"], "t");
    assert_eq!(v["witness"]["c"], 2);
    let v = json(&["classify-base", "--field", "3", "--base", "t^2"]);
    assert_eq!(v["tag"], "Generic");
}

#[test]
fn verify_q3d6() {
    let out = fqt(&["verify", "paper", "--case", "q3d6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("primes of degree 6: 116"));
    assert!(text.contains("Wilson primes: 15"));
    let v = json(&["verify", "paper", "--case", "q3d6"]);
    let reports: Vec<CaseReport> = serde_json::from_value(v).unwrap();
    assert!(reports[0].passed());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fqt(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        fqt(&["verify", "paper", "--case", "q9d9"]).status.code(),
        Some(2)
    );
    let bad_poly = fqt(&["check", "wilson", "--field", "3", "--prime", "t^2+2"]);
    assert_eq!(bad_poly.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_poly.stderr).contains("reducible"));
    assert_eq!(
        fqt(&["primes", "list", "--field", "6", "--degree", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn factor_is_deterministic() {
    let args = [
        "factor",
        "--field",
        "3",
        "--poly",
        "t^12+t^7+2*t+1",
        "--seed",
        "9",
        "--json",
    ];
    let a = fqt(&args);
    let b = fqt(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc: FactorizationDoc = serde_json::from_slice(&a.stdout).unwrap();
    assert!(doc.cofactor.is_none());
    let one_job = fqt(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(one_job.stdout, a.stdout);
}

#[test]
fn seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_fqt"))
        .args(["factor", "--field", "2", "--poly", "t^8+t+1"])
        .env("CARLITZ_SEED", "123")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_fqt"))
        .args(["factor", "--field", "2", "--poly", "t^8+t+1"])
        .env("CARLITZ_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn survey_persists_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("f3.jsonl");
    let csv = dir.path().join("f3.csv");
    let s = store.to_str().unwrap();
    let first = fqt(&[
        "survey",
        "--field",
        "3",
        "--degrees",
        "1..4",
        "--out",
        s,
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(first.status.success());
    assert!(String::from_utf8_lossy(&first.stdout).contains("4 degree(s) computed"));
    let bytes = std::fs::read(&store).unwrap();
    let again = fqt(&["survey", "--field", "3", "--degrees", "1..4", "--out", s]);
    assert!(String::from_utf8_lossy(&again.stdout).contains("0 degree(s) computed"));
    assert_eq!(std::fs::read(&store).unwrap(), bytes);

    let (_, stored) = persist::read_records(&store).unwrap();
    let printed: Vec<SurveyRecord> =
        serde_json::from_value(json(&["survey", "--field", "3", "--degrees", "1..4"])).unwrap();
    assert_eq!(stored, printed);
    let table = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(table.lines().count(), 5);
}

#[test]
fn theorem7_and_scans() {
    let rep: Theorem7Report = serde_json::from_value(json(&[
        "theorem7", "--field", "3", "--degree", "3", "--c", "2", "--mode", "full",
    ]))
    .unwrap();
    assert_eq!(rep.special_primes.len(), 2);
    assert_eq!(rep.degree_sum_matches, Some(true));
    let found: Vec<ScanFindingDoc> =
        serde_json::from_value(json(&["scan", "borisov", "--field", "3", "--d-max", "4"])).unwrap();
    assert!(found.iter().all(|f| f.d == 3));
    let alt: Vec<ScanFindingDoc> = serde_json::from_value(json(&[
        "scan",
        "alt-conjecture",
        "--field",
        "3",
        "--d-max",
        "4",
    ]))
    .unwrap();
    assert!(alt.iter().all(|f| !f.violates_expectation));
}

#[test]
fn other_commands() {
    let v = json(&["primes", "list", "--field", "2", "--degree", "4"]);
    assert_eq!(v["primes"].as_array().unwrap().len(), 3);
    let v = json(&[
        "carlitz", "compute", "--field", "2", "--what", "bracket", "--n", "2",
    ]);
    assert_eq!(v["value"], "t^4+t");
    let v = json(&[
        "carlitz",
        "compute",
        "--field",
        "3",
        "--what",
        "f",
        "--n",
        "3",
        "--modulo",
        "t^3+2*t+2",
    ]);
    assert_eq!(v["value"], "2");
    let v = json(&[
        "deriv",
        "eval",
        "--field",
        "3",
        "--prime",
        "t^3+2*t+2",
        "--input",
        "t",
        "--order",
        "1",
    ]);
    assert!(v["values"].as_object().unwrap().len() >= 3);
    let v = json(&["theorem5", "--field", "3", "--degree", "3"]);
    assert_eq!(v["wilson_primes"].as_array().unwrap().len(), 2);
    let v = json(&[
        "distribution",
        "--field",
        "2",
        "--prime",
        "t^2+t+1",
        "--degree-bound",
        "2",
    ]);
    assert_eq!(v["counts"], serde_json::json!([1, 2, 0, 0]));
    let tight = fqt(&[
        "distribution",
        "--field",
        "2",
        "--prime",
        "t^2+t+1",
        "--degree-bound",
        "9",
        "--budget",
        "10",
    ]);
    assert_eq!(tight.status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = fqt(&[
        "classify-base",
        "--field",
        "3",
        "--base",
        "t^3",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["tag"], "AllPrimesWieferich");
}
