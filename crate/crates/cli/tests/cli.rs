use std::process::{Command, Output};

use serde_json::Value;

fn aqshape(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqshape"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = aqshape(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn sx_table_single_row() {
    let o = aqshape(&["sx-table", "--q", "(2,2)"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "Q,max_R_minus_1,max_R0_minus_1,sx_goal,trivial,eps");
    assert_eq!(lines[1], "\"(2,2)\",8,6,7.50,15,0");
}

#[test]
fn sx_table_defaults_to_reference_rows() {
    let o = aqshape(&["sx-table"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 17);
    assert!(out.contains("\"(2,2,2,2,1,1)\",74,54,82.50,99,0"));
    assert!(out.contains("\"(2,2,2)\",21,17,23.33,35,2"));
}

#[test]
fn sx_table_json_is_exact() {
    let v = json(&["sx-table", "--q", "(2,2);(2,2,2,2,1,1)", "--format", "json"]);
    assert_eq!(v[0]["sx_goal"], "15/2");
    assert_eq!(v[1]["sx_goal"], "165/2");
    assert_eq!(v[1]["provable"]["main"], "74");
}

#[test]
fn verify_table1_passes() {
    let v = json(&["verify", "--target", "table1"]);
    assert_eq!(v["checked_count"], 16);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_respects_the_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_aqshape"))
        .args(["verify", "--target", "qd-bound", "--max-n", "60"])
        .env("AQSHAPE_MAX_N", "12")
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["range"]["max_n"], 12);
}

#[test]
fn density_certificate_lists_findings() {
    let v = json(&["verify", "--target", "density", "--max-n", "20"]);
    assert_eq!(v["findings"]["r_failures"], serde_json::json!(["(2,2)"]));
}

#[test]
fn euler_factor() {
    let o = aqshape(&["euler", "--gamma", "2", "--ideal", "2,3"]);
    assert_eq!(stdout(&o).trim(), "2/9");
    let o = aqshape(&["euler", "--gamma", "-1", "--ideal", "3"]);
    assert_eq!(stdout(&o).trim(), "4/3");
    let o = aqshape(&["euler", "--gamma", "1", "--ideal", "5^2"]);
    assert_eq!(stdout(&o).trim(), "4/5");
}

#[test]
fn delta_max_report() {
    let v = json(&["delta-max", "--rep", &data("u61_pair.json")]);
    assert_eq!(v["q_can"], serde_json::json!([3, 2, 1, 1]));
    assert_eq!(v["r_pi0"]["main"], "22");
    assert_eq!(v["delta_max"].as_array().unwrap().len(), 11);
}

#[test]
fn leading_terms() {
    let v = json(&["leading-term", "--rep", &data("u61_even_degree.json")]);
    assert_eq!(v["exponent"]["main"], "29");
    assert_eq!(v["L"], serde_json::json!([4, 1, -1]));
    assert_eq!(v["coeff"], "100/9");
    assert_eq!(v["zero"], false);
    let v = json(&[
        "leading-term",
        "--rep",
        &data("u61_even_degree.json"),
        "--packet-convention",
        "example1",
    ]);
    assert_eq!(v["coeff"], "400/49");
    let v = json(&["leading-term", "--rep", &data("u51_obstructed.json")]);
    assert_eq!(v["zero"], true);
    assert_eq!(v["coeff"], "0");
}

#[test]
fn coh_bounds_hodge_query() {
    let v = json(&["coh-bounds", "--signature", "2,1", "--hodge", "0,1"]);
    assert_eq!(v["bound"]["main"], "4");
    assert_eq!(v["contributors"].as_array().unwrap().len(), 1);
    let v = json(&["coh-bounds", "--signature", "6,2", "--degree", "9"]);
    assert!(!v["contributors"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(aqshape(&["sx-table", "--q", "(2,x)"]).status.code(), Some(2));
    assert_eq!(
        aqshape(&["euler", "--gamma", "0", "--ideal", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        aqshape(&["euler", "--gamma", "1", "--ideal", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        aqshape(&["delta-max", "--rep", "/nonexistent.json"]).status.code(),
        Some(2)
    );
    assert_eq!(
        aqshape(&["leading-term", "--rep", &data("u61_pair.json")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(aqshape(&["bogus"]).status.code(), Some(2));
    assert_eq!(aqshape(&["coh-bounds", "--signature", "2,1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = aqshape(&["verify", "--target", "maxsl2", "--max-n", "10"]);
    let b = aqshape(&["verify", "--target", "maxsl2", "--max-n", "10"]);
    let c = Command::new(env!("CARGO_BIN_EXE_aqshape"))
        .args(["verify", "--target", "maxsl2", "--max-n", "10"])
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}
