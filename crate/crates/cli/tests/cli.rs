use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbonlab")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn domino_function_in_schur_basis() {
    let v = json_of(&["compute", "G", "--shape", "2,2", "--n", "2", "--basis", "schur"]);
    assert_eq!(v["basis"], "schur");
    assert_eq!(
        v["coeffs"],
        json!([{ "part": "2", "poly": { "2": "1" } }, { "part": "1,1", "poly": { "0": "1" } }])
    );
    let pretty = run(&["compute", "G", "--shape", "2,2", "--n", "2"]);
    assert_eq!(String::from_utf8_lossy(&pretty.stdout).trim(), "q^2·s(2) + s(1,1)");
}

#[test]
fn border_strip_polynomial() {
    let v = json_of(&["compute", "X", "--outer", "5,5,2", "--inner", "2", "--n", "2", "--type", "5"]);
    assert_eq!(v, json!({ "1": "1", "3": "-2", "5": "1" }));
}

#[test]
fn quotient_and_core() {
    let v = json_of(&["compute", "quotient", "--shape", "7,6,4,3,1", "--n", "3"]);
    assert_eq!(v, json!(["3", "2,2", ""]));
    let v = json_of(&["compute", "core", "--shape", "7,6,4,3,1", "--n", "3"]);
    assert_eq!(v, json!(""));
}

#[test]
fn domino_correspondence() {
    let out = run(&["compute", "domino-rsk", "--biword", "1 1 3; 0 2 4; 0 3 2; 1 4 1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("total color 4 = 3 + 1"), "{text}");
}

#[test]
fn verify_passes_and_reports() {
    let out = run(&["verify", "pieri", "--n", "2", "--kmax", "2", "--sizemax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS pieri"));
    let v = json_of(&["verify", "symmetry", "--n", "2", "--sizemax", "4"]);
    assert_eq!(v["identity"], "symmetry");
    assert!(v["cells"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn malformed_input_exits_with_two() {
    for args in [
        &["compute", "G", "--shape", "2,x"][..],
        &["compute", "G", "--shape", "2,3"],
        &["compute", "X", "--outer", "2", "--inner", "3", "--n", "2", "--type", "1"],
        &["compute", "domino-rsk", "--biword", "2 1 1"],
        &["verify", "no-such-identity"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn identities_are_listed() {
    let out = run(&["identities"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["pieri", "cauchy", "omega", "domino-rsk"] {
        assert!(text.contains(name), "{name}");
    }
}
