use std::process::{Command, Output};

fn hk3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hk3")).args(args).output().expect("spawn hk3")
}

#[test]
fn json_is_byte_identical() {
    let args = ["--suite", "lattice", "--suite", "periods", "--suite", "invariants", "--format", "json"];
    let a = hk3(&args);
    let b = hk3(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["config"]["suites"], serde_json::json!(["lattice", "periods", "invariants"]));
}

#[test]
fn periods_reports_scaling_finding() {
    let out = hk3(&["--suite", "periods"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().find(|l| l.contains("periods.fc.scaling ")).unwrap();
    assert!(line.starts_with("finding"), "{line}");
}

#[test]
fn theta_order_too_small_is_usage_error() {
    let out = hk3(&["--suite", "theta", "--order", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    // the same order is fine without theta
    assert_eq!(hk3(&["--suite", "lattice", "--order", "8"]).status.code(), Some(0));
}

#[test]
fn bad_arguments_exit_two() {
    for args in [&["--suite", "moduli"][..], &["--format", "yaml"], &["--order", "many"], &["--frobnicate"]] {
        let out = hk3(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn emit_series_writes_exact_rows() {
    let dir = std::env::temp_dir().join(format!("hk3-series-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("series.json");
    let out = hk3(&["--suite", "periods", "--emit-series", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let fc = &v["periods"]["fc"];
    assert_eq!(fc["order"], 8);
    // constant term of F_C is 1
    let rows = fc["terms"].as_array().unwrap();
    assert!(rows.iter().any(|r| r.as_array().unwrap() == &serde_json::json!([0, 0, 0, 1, 1]).as_array().unwrap()[..]));
    std::fs::remove_dir_all(&dir).ok();
}
