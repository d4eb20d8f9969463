//! End-to-end checks of the command-line interface: output schemas,
//! fixture comparison, determinism and exit codes.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multspec"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("multspec-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn squaring_graph_doc() -> PathBuf {
    temp_file(
        "squaring.json",
        r#"{"bidegree": [1, 2], "field": "Q", "terms": [[0, 2, "1"], [1, 0, "-1"]]}"#,
    )
}

#[test]
fn nu_output_and_determinism() {
    let a = run(&["nu", "--n", "6"]);
    assert_eq!(
        String::from_utf8_lossy(&a.stdout).trim(),
        r#"{"poly":"x^6 - x^3 - x^2 + x"}"#
    );
    let b = run(&["nu", "--n", "6"]);
    assert_eq!(a.stdout, b.stdout, "byte-identical output");
}

#[test]
fn bound_floor_matches() {
    let v = stdout_json(&run(&["bound", "--d", "1", "--e", "3", "--p", "2"]));
    assert_eq!(v["floor_bound"], Value::from(8437));
    assert_eq!(v["bound"], Value::from("16875/2"));
    assert_eq!(v["N"], Value::from("30"));
}

#[test]
fn iterate_emits_the_same_schema() {
    let input = squaring_graph_doc();
    let v = stdout_json(&run(&["iterate", "--input", input.to_str().unwrap(), "--n", "2"]));
    assert_eq!(v["bidegree"], serde_json::json!([1, 4]));
    assert_eq!(v["field"], Value::from("Q"));
    // output parses back as an input document
    let echo = temp_file("iterate-echo.json", &v.to_string());
    let v2 = stdout_json(&run(&["iterate", "--input", echo.to_str().unwrap(), "--n", "1"]));
    assert_eq!(v, v2);
}

#[test]
fn spectrum_over_q_and_over_a_prime_field() {
    let input = squaring_graph_doc();
    let v = stdout_json(&run(&[
        "spectrum", "--input", input.to_str().unwrap(), "--n", "2", "--orbit",
    ]));
    assert_eq!(v["degree"], Value::from(2));
    assert_eq!(v["orbit_form"], Value::from("dx + 4*dy"));
    assert_eq!(v["multipliers"], serde_json::json!(["4", "4"]));

    let fp_doc = temp_file(
        "squaring-fp.json",
        r#"{"bidegree": [1, 2], "field": {"p": 101}, "terms": [[0, 2, "1"], [1, 0, "-1"]]}"#,
    );
    let v = stdout_json(&run(&["spectrum", "--input", fp_doc.to_str().unwrap(), "--n", "1"]));
    assert_eq!(v["multipliers"], serde_json::json!(["0", "0", "2"]));
}

#[test]
fn verify_cubic_verdict() {
    let v = stdout_json(&run(&["verify-cubic"]));
    assert_eq!(v["verdict"], Value::from("injective-on-fiber"));
    assert_eq!(v["support_points"], Value::from(18));
    assert_eq!(v["genuine_points"], Value::from(12));
    assert_eq!(v["seed"], Value::from(42));
}

#[test]
fn hilbert_veronese_pipeline() {
    let mut num = vec!["0"; 61];
    num[0] = "1";
    num[60] = "-1";
    let doc = format!(
        r#"{{"numerator": [{}], "denominator_exponents": [6, 6, 6, 6, 6, 6]}}"#,
        num.join(", ")
    );
    let path = temp_file("hb2.json", &doc);
    let v = stdout_json(&run(&[
        "hilbert", "--input", path.to_str().unwrap(), "--volume", "--veronese", "6",
    ]));
    assert_eq!(v["volume"]["pole_order"], Value::from(5));
    assert_eq!(v["volume"]["volume"], Value::from("5/3888")); // 10/6^5 reduced
    assert_eq!(v["veronese"]["denominator_exponents"], serde_json::json!([1, 1, 1, 1, 1, 1]));
    let expect_num: Vec<i64> =
        (0..=10).map(|i| if i == 0 { 1 } else if i == 10 { -1 } else { 0 }).collect();
    assert_eq!(v["veronese"]["numerator"], serde_json::json!(expect_num));
}

#[test]
fn expect_fixture_comparison() {
    let fixture = temp_file("nu6.json", r#"{"poly": "x^6 - x^3 - x^2 + x"}"#);
    let ok = run(&["nu", "--n", "6", "--expect", fixture.to_str().unwrap()]);
    assert!(ok.status.success());
    let bad = temp_file("nu6-bad.json", r#"{"poly": "x^6"}"#);
    let fail = run(&["nu", "--n", "6", "--expect", bad.to_str().unwrap()]);
    assert_eq!(fail.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    // usage error: unknown subcommand
    let usage = run(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));
    // mathematical error: bound formula needs d != e
    let math = run(&["bound", "--d", "2", "--e", "2", "--p", "2"]);
    assert_eq!(math.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&math.stderr).contains("d != e"));
    // parse error on a malformed document
    let broken = temp_file("broken.json", "{");
    let parse = run(&["iterate", "--input", broken.to_str().unwrap(), "--n", "1"]);
    assert_eq!(parse.status.code(), Some(1));
}

#[test]
fn interp_demo_is_seed_deterministic() {
    let a = run(&["interp-demo", "--seed", "9"]);
    let b = run(&["interp-demo", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["coefficients"][0]["coefficient"], Value::from("1"));
    assert_eq!(v["coefficients"][1]["coefficient"], Value::from("-2"));
    assert_eq!(v["complexity"]["sample_count"], Value::from(7));
}

#[test]
fn covariants_of_a_cubic_graph() {
    let doc = temp_file(
        "cubing.json",
        r#"{"bidegree": [1, 3], "field": "Q", "terms": [[0, 3, "1"], [1, 0, "-1"]]}"#,
    );
    let v = stdout_json(&run(&["covariants", "--input", doc.to_str().unwrap()]));
    assert_eq!(v["quartic"], Value::from("-z0^3*z1 + z0*z1^3"));
    assert_eq!(v["quadratic"], Value::from("z0^2 + z1^2"));
    let sigma = v["sigma"].as_array().unwrap();
    assert_eq!(sigma.len(), 5);
    assert_eq!(sigma[1], Value::from("0"));
}

#[test]
fn schur_repeated_values_fall_back_to_the_tableau_route() {
    let v = stdout_json(&run(&["schur", "--shape", "2,1,0", "--values", "4,2,2"]));
    assert_eq!(v["kostka"], Value::from("144"));
    assert_eq!(v["bialternant"], Value::Null);
    let v = stdout_json(&run(&["schur", "--shape", "2,1", "--values", "1,2,3"]));
    assert_eq!(v["kostka"], v["bialternant"]);
}
