use std::process::{Command, Output};

use kpath_core::report::Report;
use kpath_core::series::{QSeries, SeriesJson, XLaurentSeries};
use serde_json::Value;

fn kpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpath"))
        .args(args)
        .env_remove("RUST_LOG")
        .output()
        .expect("kpath runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_passing_identity_exits_zero() {
    let o = kpath(&["verify", "thm1_i2", "--trunc", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS thm1_i2 (mod q^100"));
}

#[test]
fn verify_failing_identity_exits_one() {
    let o = kpath(&["verify", "gsystem_i2_reference"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL gsystem_i2_reference"));
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let o = kpath(&["verify", "no_such_id"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("unknown identity `no_such_id`"), "{err}");
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(kpath(&["verify"]).status.code(), Some(2));
    assert_eq!(kpath(&["expand", "nope"]).status.code(), Some(2));
    assert_eq!(kpath(&["table", "b3", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        kpath(&["verify", "euler", "--trunc", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn matrix_report_names_the_convention() {
    let o = kpath(&["verify", "matrix_M"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("matches the reference matrix (256 cells)"));
    assert!(out.contains("note: index convention: (p2,p1) -> 1 + 4*p1 + p2"));
}

#[test]
fn verify_json_round_trips() {
    let o = kpath(&["verify", "euler", "--trunc", "40", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["identity"], "euler");
    assert_eq!(v["trunc"], 40);
    assert_eq!(v["pass"], true);
    assert_eq!(v["first_mismatch"], Value::Null);
    let r: Report = serde_json::from_value(v).unwrap();
    assert!(r.pass);
}

#[test]
fn failing_json_report_points_at_the_mismatch() {
    let o = kpath(&["verify", "gsystem_i2_reference", "--json"]);
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!r.pass);
    let m = r.first_mismatch.expect("a witness coefficient");
    assert_ne!(m.lhs, m.rhs);
}

#[test]
fn xdeg_report_is_opt_in() {
    let plain = stdout(&kpath(&["verify", "qdif", "--trunc", "16"]));
    assert!(!plain.contains("x-support"));
    let shown = stdout(&kpath(&[
        "verify",
        "qdif",
        "--trunc",
        "16",
        "--xdeg-report",
    ]));
    assert!(shown.contains("J: observed x-support [0, "), "{shown}");
}

#[test]
fn expand_rogers_ramanujan_product() {
    let o = kpath(&["expand", "rr_product:1", "--trunc", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "1 + q + q^2 + q^3 + 2q^4 + 2q^5 + 3q^6 + 3q^7 + O(q^8)\n"
    );
}

#[test]
fn expand_json_matches_the_library() {
    let o = kpath(&["expand", "J_3L0", "--trunc", "1", "--json"]);
    assert_eq!(stdout(&o), "{\"trunc\":1,\"terms\":[[0,[[0,\"1\"]]]]}\n");

    let o = kpath(&["expand", "cap_product:2", "--trunc", "12", "--json"]);
    let doc: SeriesJson = serde_json::from_slice(&o.stdout).unwrap();
    let expect = kpath_core::series::capparelli_product(2, 12);
    assert_eq!(
        doc.to_series().unwrap(),
        XLaurentSeries::from_q_series(expect)
    );
}

#[test]
fn character_from_expansion() {
    let o = kpath(&["expand", "FD:2", "--trunc", "13", "--json"]);
    let doc: SeriesJson = serde_json::from_slice(&o.stdout).unwrap();
    let at_one = doc.to_series().unwrap().at_x_one();
    let counts = [1, 1, 2, 4, 5, 8, 12, 17, 24, 34, 46, 62, 84];
    assert_eq!(at_one, QSeries::from_coeffs(counts, 13));
}

#[test]
fn table_b1_golden() {
    let o = kpath(&["table", "b1", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let expect = "\
b1_0 = 1    [value at q=1: 1]
b1_1 = q    [value at q=1: 1]
b1_2 = 0    [value at q=1: 0]
b1_3 = q^4    [value at q=1: 1]
b1_4 = -q^7    [value at q=1: -1]
b1_5 = q^9(1 + q^2)    [value at q=1: 2]
";
    assert_eq!(stdout(&o), expect);
}

#[test]
fn table_c2_and_empty_range() {
    let o = kpath(&["table", "c2", "--n", "2"]);
    assert_eq!(
        stdout(&o).lines().last(),
        Some("c2_2 = q^4(1 + q^2 + q^4 + q^5)    [value at q=1: 4]")
    );
    let o = kpath(&["table", "b2", "--n", "0"]);
    assert_eq!(stdout(&o), "b2_0 = 1    [value at q=1: 1]\n");
}

#[test]
fn table_json_rows() {
    let o = kpath(&["table", "c1", "--n", "3", "--json"]);
    let rows: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["value_at_1"], "8");
    assert_eq!(
        rows[1]["polynomial"],
        serde_json::json!([[1, "1"], [3, "1"]])
    );
}

#[test]
fn list_and_crystal() {
    let out = stdout(&kpath(&["list"]));
    for id in ["thm1_i1", "transfer16", "character_oracle", "rr_product:2"] {
        assert!(out.contains(id), "{id}");
    }
    let o = kpath(&["crystal", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["level"], 3);
    assert_eq!(v["ground_states"]["3L0"], serde_json::json!([3, 0]));
    assert_eq!(v["ground_states"]["2L0+L1"], serde_json::json!([2, 1]));
}
