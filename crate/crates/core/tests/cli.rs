use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_minkasym"));
    c.env_remove("ASYM_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn field(out: &Output, key: &str) -> f64 {
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in {text}"));
    line.trim().parse().unwrap()
}

#[test]
fn golden_house_values() {
    let out = run(&["compute", "--family", "golden_house"]);
    assert!(out.status.success());
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((field(&out, "s") - phi).abs() < 1e-9);
    assert!((field(&out, "alpha") - 1.0).abs() < 1e-9);
    assert!((field(&out, "tau") - 1.0).abs() < 1e-9);
}

#[test]
fn k_max_values() {
    let out = run(&["compute", "--family", "k_max", "--param", "s=1.9"]);
    assert!(out.status.success());
    assert!((field(&out, "alpha") - 0.727969).abs() < 1e-6);
    assert_eq!(field(&out, "crossings"), 6.0);
}

#[test]
fn square_from_file_with_central_gauge() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.json");
    std::fs::write(&path, r#"{"vertices": [[0,0],[1,0],[1,1],[0,1]]}"#).unwrap();
    let out = run(&["compute", "--file", path.to_str().unwrap(), "--gauge", "central"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!((field(&out, "s") - 1.0).abs() < 1e-9);
    assert!((field(&out, "D/w") - 1.0).abs() < 1e-9);
}

#[test]
fn json_output_parses() {
    let out = run(&["compute", "--family", "k_min", "--param", "s=1.8", "--gauge", "disk", "--gauge-param", "m=256", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["s"].as_f64().unwrap() - 1.8).abs() < 1e-9);
    assert!(v["gauge"]["dw_ratio"].as_f64().unwrap() >= 1.0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["compute", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--family", "regular_kgon", "--param", "k=4"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--file", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--random", "1-2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let out = bin()
        .env("ASYM_TOL", "abc")
        .args(["compute", "--family", "triangle", "--gauge", "disk"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn asymmetric_gauge_is_rejected() {
    let out = run(&["compute", "--family", "golden_house", "--gauge", "triangle"]);
    assert!(!out.status.success());
}

#[test]
fn random_sample_is_replayable() {
    let a = run(&["compute", "--random", "7:3"]);
    let b = run(&["compute", "--random", "7:3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let s = field(&a, "s");
    assert!((1.0..=2.0).contains(&s));
}

#[test]
fn verify_families_passes() {
    let out = run(&["verify", "--suite", "families"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failures"));
}

fn diagram(which: &str, grid: &str, dir: &Path, tag: &str) -> (String, String) {
    let csv = dir.join(format!("{tag}.csv"));
    let svg = dir.join(format!("{tag}.svg"));
    let out = run(&[
        "diagram",
        "--which",
        which,
        "--grid",
        grid,
        "--csv",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    (std::fs::read_to_string(csv).unwrap(), std::fs::read_to_string(svg).unwrap())
}

#[test]
fn empty_grid_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let (csv, svg) = diagram("alpha", "0", dir.path(), "a");
    assert_eq!(csv.trim(), "family,params,s,alpha,tau,crossings");
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn diagram_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, _) = diagram("dw", "6", dir.path(), "a");
    let (b, _) = diagram("dw", "6", dir.path(), "b");
    assert_eq!(a, b);
    assert!(a.lines().count() > 36);
}
