use std::process::{Command, Output};

use serde_json::Value;

fn monobent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monobent"))
        .args(args)
        .env_remove("MONOBENT_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn field_info_reports_modulus_and_cosets() {
    let out = monobent(&["field-info", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["modulus_hex"], "0x13");
    assert_eq!(v["generator_hex"], "0x2");
    assert_eq!(v["summary"]["coset_count"], 5);
    for key in ["schema", "version", "n", "seed"] {
        assert!(!v[key].is_null(), "missing {key}");
    }
}

#[test]
fn non_primitive_modulus_is_reported() {
    let out = monobent(&["field-info", "--n", "4", "--modulus", "0x1F"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["modulus_hex"], "0x1f");
    assert_eq!(v["summary"]["primitive_modulus"], false);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(monobent(&["scan-open-problem", "--n", "3"]).status.code(), Some(2));
    assert_eq!(monobent(&["field-info", "--n", "4", "--modulus", "0x15"]).status.code(), Some(2));
    assert_eq!(monobent(&["field-info"]).status.code(), Some(2));
    assert_eq!(monobent(&["kloosterman-scan", "--k", "15"]).status.code(), Some(2));
    assert_eq!(monobent(&["bogus"]).status.code(), Some(2));
}

#[test]
fn open_problem_at_n6() {
    let out = monobent(&["scan-open-problem", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["maximal"], serde_json::json!([9, 18, 36]));
    assert_eq!(v["rows"].as_array().unwrap().len(), 62);
}

#[test]
fn kloosterman_k2_needs_the_flag() {
    let out = monobent(&["kloosterman-scan", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
    let out = monobent(&["kloosterman-scan", "--k", "2", "--expect-counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["summary"]["violations"], serde_json::json!(["0x2", "0x3"]));
}

#[test]
fn families_at_n8() {
    let out = monobent(&["families-verify", "--n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["bent"] == true));
}

#[test]
fn bent_check_from_table_and_monomial() {
    let out = monobent(&["bent-check", "--n", "2", "--table", "e"]);
    assert_eq!(out.status.code(), Some(0));
    let out = monobent(&["bent-check", "--n", "4", "--alpha", "0x1", "--d", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = monobent(&["bent-check", "--n", "4", "--alpha", "0x2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["rows"][0]["dual_hex"].is_string());
}

#[test]
fn csv_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.csv");
    let out = monobent(&[
        "kloosterman-scan",
        "--k",
        "3",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["k", "alpha_hex", "sum", "trace_bit"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(&rows[0][2], "-1");
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    for args in [
        vec!["scan-open-problem", "--n", "8"],
        vec!["gauss-verify", "--n", "6", "--seed", "7"],
        vec!["carry-check", "--n", "12", "--trials", "2000", "--seed", "3"],
        vec!["families-verify", "--n", "6"],
    ] {
        let mut one = args.clone();
        one.extend(["--threads", "1"]);
        let mut four = args.clone();
        four.extend(["--threads", "4"]);
        let a = monobent(&one);
        let b = monobent(&four);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn thread_count_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_monobent"))
        .args(["exponent-profile", "--n", "8", "--d", "17"])
        .env("MONOBENT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rows"][0]["min_v"], 4);
    assert_eq!(v["rows"][0]["meets_weight_condition"], true);

    let out = Command::new(env!("CARGO_BIN_EXE_monobent"))
        .args(["field-info", "--n", "4"])
        .env("MONOBENT_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_is_recorded() {
    let a = monobent(&["carry-check", "--n", "8", "--trials", "100", "--seed", "1"]);
    let v = json(&a);
    assert_eq!(v["seed"], 1);
    assert_eq!(v["passed"], true);
}
