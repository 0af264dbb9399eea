use std::process::{Command, Output};

use serde_json::Value;

fn k3mat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3mat")).args(args).env_remove("K3MAT_WORKERS").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = k3mat(&[&["--format", "json"], args].concat());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn assert_schema(v: &Value) {
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["certificates", "records", "status"]);
    assert!(v["records"].is_array());
    for c in v["certificates"].as_array().unwrap() {
        let keys: Vec<&String> = c.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["claim", "computed", "description", "expected", "status"]);
        assert_eq!(c["status"], if c["computed"] == c["expected"] { "pass" } else { "fail" });
    }
}

#[test]
fn search_114_finds_one_triple() {
    let v = json(&["search", "--max", "114"]);
    assert_schema(&v);
    let r = &v["records"][0];
    assert_eq!(v["records"].as_array().unwrap().len(), 1);
    assert_eq!((&r["a"], &r["b"], &r["c"]), (&"26".into(), &"51".into(), &"114".into()));
    assert_eq!(r["eigenvalues"], serde_json::json!(["136", "-19", "-117"]));
}

#[test]
fn mult_two_emits_degree_eight_family() {
    let v = json(&["mult", "--n", "2", "--emit-param"]);
    assert_schema(&v);
    assert_eq!(v["status"], "pass");
    let r = &v["records"][0];
    assert_eq!(r["degree"], 8);
    assert_eq!(r["parametrization"]["b"], "-t^7 + 4*t^5 - 4*t");
}

#[test]
fn param_evaluates_at_three() {
    let v = json(&["param", "--t", "3"]);
    assert_schema(&v);
    assert_eq!(v["records"][1]["point"], serde_json::json!(["190", "-55", "-135", "125", "99", "57"]));
}

#[test]
fn json_output_round_trips() {
    let out = k3mat(&["--format", "json", "lattice-forms", "--det", "48"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    assert_schema(&v);
    assert_eq!(v["records"][0]["form"], serde_json::json!([[2, 0], [0, 24]]));
    assert_eq!(v["records"][0]["discriminant_group"]["invariants"], serde_json::json!(["2", "24"]));
}

#[test]
fn worker_count_does_not_change_output() {
    for args in [&["search", "--max", "125"][..], &["ns", "count-classes", "--list"][..]] {
        let one = k3mat(&[&["--format", "csv", "--workers", "1"], args].concat());
        let four = k3mat(&[&["--format", "csv", "--workers", "4"], args].concat());
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout);
    }
}

#[test]
fn verify_all_passes() {
    let v = json(&["verify-all"]);
    assert_schema(&v);
    let failed: Vec<&Value> =
        v["certificates"].as_array().unwrap().iter().filter(|c| c["status"] != "pass").collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert_eq!(v["status"], "pass");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [&["bogus"][..], &["mult", "--n", "0"], &["--workers", "0", "search", "--max", "5"], &["search"]] {
        assert_eq!(k3mat(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn text_report_marks_passes() {
    let out = k3mat(&["height"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS") && l.contains("height.PP") && l.ends_with("3/2")));
}
