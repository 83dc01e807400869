use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use unicyclic::graph::{make_lollipop, read_edge_list_file};
use unicyclic::harness::SWEEP_HEADER;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unicyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_family_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("lollipop.txt");
    let out = cli(&[
        "gen",
        "--family",
        "lollipop",
        "--n",
        "12",
        "--r",
        "8",
        "-o",
        path_str(&file),
    ]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(
        read_edge_list_file(&file).unwrap(),
        make_lollipop(12, 8).unwrap()
    );

    let missing = cli(&[
        "gen",
        "--family",
        "compass",
        "--n",
        "14",
        "--r",
        "8",
        "-o",
        path_str(&file),
    ]);
    assert!(!missing.status.success());
    assert!(String::from_utf8_lossy(&missing.stderr).contains("--rp"));

    let bad = cli(&[
        "gen",
        "--family",
        "cycle",
        "--n",
        "2",
        "-o",
        path_str(&file),
    ]);
    assert!(!bad.status.success());
}

#[test]
fn analyze_reports_worked_examples() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("compass.txt");
    let f = path_str(&file);
    assert!(cli(&[
        "gen", "--family", "compass", "--n", "14", "--r", "8", "--rp", "4", "--t", "3", "-o", f
    ])
    .status
    .success());
    let out = cli(&["analyze", f, "--json"]);
    assert!(out.status.success(), "{out:?}");
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["family"], "compass");
    assert_eq!(v["count01"], 5);
    assert_eq!(v["main_bound"], 5);
    assert_eq!(v["d"], 10);
    assert_eq!(v["bound_ok"], true);
    for key in SWEEP_HEADER.split(',') {
        assert!(v.get(key).is_some(), "missing {key}");
    }

    let table = stdout(&cli(&["analyze", f]));
    assert!(table
        .lines()
        .any(|l| l.starts_with("m[0,1)") && l.ends_with(" 5")));
}

#[test]
fn analyze_accepts_paths_and_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("path.txt");
    let f = path_str(&file);
    assert!(cli(&["gen", "--family", "path", "--n", "6", "-o", f])
        .status
        .success());
    let v: Value = serde_json::from_str(&stdout(&cli(&["analyze", f, "--json"]))).unwrap();
    assert_eq!(v["family"], "path");
    assert_eq!(v["count01"], 2);
    assert_eq!(v["mult1"], 1);
    assert!(v["main_bound"].is_null());

    let broken = dir.path().join("broken.txt");
    std::fs::write(&broken, "3 2\n0 1\n1 7\n").unwrap();
    let out = cli(&["analyze", path_str(&broken)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = cli(&["analyze", path_str(&dir.path().join("absent.txt"))]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("absent.txt"));
}

#[test]
fn verify_exit_codes() {
    let out = cli(&["verify", "--suite", "cycles", "--max-n", "30"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failures"));
    assert!(!cli(&["verify", "--suite", "nonsense"]).status.success());
    assert!(!cli(&["verify", "--suite", "exhaustive", "--max-n", "12"])
        .status
        .success());
    assert!(
        cli(&["verify", "--suite", "trees", "--max-n", "8", "--seed", "5"])
            .status
            .success()
    );
}

#[test]
fn scan_header_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for file in [&a, &b] {
        let out = cli(&[
            "scan",
            "--family",
            "compass",
            "--n-range",
            "5..14",
            "--out",
            path_str(file),
        ]);
        assert!(out.status.success(), "{out:?}");
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert_eq!(text.lines().next().unwrap(), SWEEP_HEADER);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true,true")));

    let out = cli(&["scan", "--family", "cycle", "--n-range", "3..8"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text
        .lines()
        .nth(4)
        .unwrap()
        .starts_with("cycle,6,6,,,3,6,1,,1,2,2,true,true"));

    assert!(!cli(&["scan", "--family", "cycle", "--n-range", "8..3"])
        .status
        .success());
    assert!(!cli(&["scan", "--family", "star", "--n-range", "3..8"])
        .status
        .success());
}
