//! End-to-end tests of the command-line interface, driving the real
//! binary through files and checking outputs and exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vertex-extrema"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout must be utf-8")
}

fn write_polygon(dir: &Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, json).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn generate_then_analyze_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let polygon_path = dir.path().join("hex.json");
    let out = run(&[
        "generate",
        "--n",
        "6",
        "--seed",
        "42",
        "--out",
        polygon_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&["analyze", polygon_path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["n"], 6);
    assert_eq!(report["vertices"].as_array().unwrap().len(), 6);

    let out = run(&[
        "triangulate",
        polygon_path.to_str().unwrap(),
        "--kind",
        "delaunay",
    ]);
    assert!(out.status.success());
    let tri: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(tri["kind"], "delaunay");
    assert_eq!(tri["triangles"].as_array().unwrap().len(), 4);
    assert_eq!(tri["diagonals"].as_array().unwrap().len(), 3);

    let out = run(&[
        "decompose",
        polygon_path.to_str().unwrap(),
        "--diagonal",
        "0,3",
    ]);
    assert!(out.status.success());
    let dec: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(dec["p1"]["parent_indices"], serde_json::json!([0, 1, 2, 3]));

    let out = run(&["verify", polygon_path.to_str().unwrap()]);
    assert!(out.status.success(), "verify must exit 0 on a passing polygon");
    assert!(stdout(&out).lines().count() > 10);

    let svg_path = dir.path().join("hex.svg");
    let out = run(&[
        "render",
        polygon_path.to_str().unwrap(),
        "--out",
        svg_path.to_str().unwrap(),
        "--circles",
        "all",
        "--triangulation",
        "anti",
    ]);
    assert!(out.status.success());
    let svg = fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("stroke-dasharray"));
}

#[test]
fn search_is_reproducible_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let rec_a = dir.path().join("a.jsonl");
    let rec_b = dir.path().join("b.jsonl");
    let report_path = dir.path().join("report.json");
    let base = [
        "search", "--trials", "30", "--n-min", "4", "--n-max", "8", "--seed", "5",
    ];

    let mut args_a: Vec<&str> = base.to_vec();
    args_a.extend(["--records", rec_a.to_str().unwrap(), "--out", report_path.to_str().unwrap()]);
    let out = run(&args_a);
    assert!(out.status.success(), "search must exit 0 with no violations");

    let mut args_b: Vec<&str> = base.to_vec();
    let rec_b_str = rec_b.to_str().unwrap().to_owned();
    args_b.extend(["--records", &rec_b_str, "--threads", "1"]);
    let out = run(&args_b);
    assert!(out.status.success());

    assert_eq!(
        fs::read(&rec_a).unwrap(),
        fs::read(&rec_b).unwrap(),
        "record streams must be byte-identical"
    );
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["trials_run"], 30);
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();

    let out = run(&["analyze", "/nonexistent/polygon.json"]);
    assert_eq!(out.status.code(), Some(2));

    let too_small = write_polygon(dir.path(), "small.json", r#"{"vertices":[["0","0"],["1","0"]]}"#);
    let out = run(&["analyze", &too_small]);
    assert_eq!(out.status.code(), Some(2));

    let quad = write_polygon(
        dir.path(),
        "quad.json",
        r#"{"vertices":[["0","0"],["5","0"],["6","4"],["1","5"]]}"#,
    );
    let out = run(&["decompose", &quad, "--diagonal", "0,2"]);
    assert_eq!(out.status.code(), Some(2), "part too small is a usage error");

    let out = run(&["verify", &quad, "--claims", "not-a-claim"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["search", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["triangulate", &quad]);
    assert_eq!(out.status.code(), Some(2), "missing --kind is a clap error");
}

#[test]
fn analyze_accepts_rational_and_decimal_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_polygon(
        dir.path(),
        "rational.json",
        r#"{"vertices":[["0","0"],["5","0"],["11/2","4.5"],["1","5"]]}"#,
    );
    let out = run(&["analyze", &path]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["s_plus"], 2);
    assert_eq!(report["s_minus"], 2);
}
