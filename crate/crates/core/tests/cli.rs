use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn emptyrect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emptyrect"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("emptyrect-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn generate_is_deterministic() {
    let args = [
        "generate",
        "--kind",
        "grid-adversarial",
        "--n",
        "30",
        "--seed",
        "4",
    ];
    let a = emptyrect(&args);
    let b = emptyrect(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("B:0,0,4096,4096\n"));
    assert_eq!(text.lines().count(), 31);
}

#[test]
fn generate_zero_points_is_header_only() {
    let out = emptyrect(&["generate", "--n", "0", "--bounds", "0,0,10,10"]);
    assert!(out.status.success());
    assert_eq!(out.stdout, b"B:0,0,10,10\n");
}

#[test]
fn query_single_point() {
    let points = scratch("one.txt", "B:0,0,10,10\n4,3\n");
    let queries = scratch("one-q.txt", "2,5\n");
    let v = stdout_json(&emptyrect(&[
        "query",
        "--points",
        points.to_str().unwrap(),
        "--queries",
        queries.to_str().unwrap(),
    ]));
    assert_eq!(v["n"], 1);
    assert_eq!(v["queries"][0]["rect"], serde_json::json!([0, 3, 10, 10]));
    assert_eq!(v["queries"][0]["area"], 70);
}

#[test]
fn build_reports_counters() {
    let v = stdout_json(&emptyrect(&["build", "--kind", "staircase", "--n", "64"]));
    assert_eq!(v["n"], 64);
    assert!(v["build"]["stored_cells"].as_u64().unwrap() > 0);
}

#[test]
fn verify_agrees() {
    let out = emptyrect(&["verify", "--n", "48", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["queries"], 100);
}

#[test]
fn verify_refuses_large_inputs() {
    let out = emptyrect(&["verify", "--n", "300"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("300"));
}

#[test]
fn malformed_points_name_the_line() {
    let points = scratch("bad.txt", "B:0,0,10,10\n1,2\nfive,3\n");
    let out = emptyrect(&["build", "--points", points.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn bench_small_sizes() {
    let v = stdout_json(&emptyrect(&[
        "bench",
        "--sizes",
        "32,64,128",
        "--num-queries",
        "20",
    ]));
    assert_eq!(v["kind"], "staircase");
    assert_eq!(v["sizes"].as_array().unwrap().len(), 3);
    assert!(v["slopes"]["entry_evals"].as_f64().unwrap().is_finite());
}

#[test]
fn monge_fuzz_is_clean() {
    let out = emptyrect(&["monge-fuzz", "--trials", "40", "--max-dim", "32"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["ok"], true);
}
