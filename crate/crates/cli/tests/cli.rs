use std::process::{Command, Output};

use fiblie::cache::CacheFile;
use fiblie::report::Report;

fn fiblie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fiblie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn dims_examples() {
    let out = fiblie(&["dims", "--algebra", "L", "--max-degree", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "degree,dim\n1,2\n2,1\n3,2\n4,2\n5,2\n");
    let q1 = fiblie(&["dims", "--algebra", "Q1", "--max-degree", "3"]);
    assert_eq!(stdout(&q1), "degree,dim\n1,1\n2,0\n3,0\n");
    let a1 = fiblie(&["dims", "--algebra", "A1", "--max-degree", "3"]);
    assert_eq!(stdout(&a1), "degree,dim\n1,0\n2,0\n3,1\n");
}

#[test]
fn homology_examples() {
    for algebra in ["L", "Ltilde"] {
        let out = fiblie(&["homology", "--n", "1", "--algebra", algebra, "--max-degree", "6"]);
        assert_eq!(out.status.code(), Some(0));
        let dims: Vec<String> = stdout(&out)
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().to_string())
            .collect();
        assert_eq!(dims, ["2", "0", "0", "0", "0", "0"]);
    }
    let out = fiblie(&["homology", "--n", "2", "--max-degree", "4", "--format", "json"]);
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.rows.last().unwrap().dim, Some(1));
    assert_eq!(report.rows[3].representatives.as_ref().unwrap().len(), 1);
    assert!(report.all_passed());
}

#[test]
fn csv_and_json_agree() {
    let csv = stdout(&fiblie(&["homology", "--n", "2", "--max-degree", "16"]));
    let json = stdout(&fiblie(&["homology", "--n", "2", "--max-degree", "16", "--format", "json"]));
    let report: Report = serde_json::from_str(&json).unwrap();
    for (line, row) in csv.lines().skip(1).zip(&report.rows) {
        let cells: Vec<usize> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cells, [row.degree, row.dim.unwrap(), row.partial_sum.unwrap()]);
    }
    assert_eq!(csv.lines().count(), report.rows.len() + 1);
}

#[test]
fn outputs_are_deterministic() {
    let args = ["homology", "--n", "2", "--algebra", "L1", "--max-degree", "18", "--format", "json"];
    let a = fiblie(&args);
    let b = fiblie(&args);
    assert_eq!(a.stdout, b.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_fiblie"))
        .args(args)
        .env("FIBLIE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, single.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(fiblie(&["verify", "--suite", "core", "--max-degree", "12"]).status.code(), Some(0));
    assert_eq!(fiblie(&["verify", "--suite", "everything"]).status.code(), Some(2));
    assert_eq!(fiblie(&["verify", "--check", "no-such-check"]).status.code(), Some(2));
    assert_eq!(
        fiblie(&["verify", "--suite", "core", "--check", "h1-L"]).status.code(),
        Some(2)
    );
    assert_eq!(fiblie(&["dims", "--algebra", "Z3"]).status.code(), Some(2));
    assert_eq!(fiblie(&["dims", "--max-degree", "0"]).status.code(), Some(2));
    assert_eq!(fiblie(&["homology", "--n", "3"]).status.code(), Some(2));
    assert_eq!(fiblie(&["hopf", "--max-degree", "13"]).status.code(), Some(2));
    assert_eq!(fiblie(&["bogus"]).status.code(), Some(2));
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_fiblie"))
        .args(["dims", "--max-degree", "3"])
        .env("FIBLIE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));
}

#[test]
fn verify_single_check_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = fiblie(&[
        "verify",
        "--suite",
        "homology",
        "--check",
        "step2-boundary",
        "--max-degree",
        "10",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.checks.len(), 1);
    assert_eq!(report.checks[0].name, "step2-boundary");
    assert!(report.checks[0].details.contains("v2^v5 + v3^t1.v5"));
}

#[test]
fn verify_structure_runs_derived_generators() {
    let out = fiblie(&["verify", "--suite", "structure", "--max-degree", "14"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("pass derived-generators")));
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn hopf_rows() {
    let out = fiblie(&["hopf", "--max-degree", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "degree,witt,dim_l,hopf_h2,ce_h2,agree\n1,2,2,,,\n2,1,1,0,0,true\n3,2,2,0,0,true\n4,3,2,1,1,true\n"
    );
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let p = path.to_str().unwrap();
    assert_eq!(fiblie(&["cache", "--write", p, "--max-degree", "10"]).status.code(), Some(0));
    let cache = CacheFile::read(&path).unwrap();
    assert_eq!(cache, CacheFile::build(fiblie_core::AlgebraId::L, 10));
    let read = fiblie(&["cache", "--read", p]);
    assert_eq!(read.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout(&read)).unwrap();
    assert!(report.all_passed());

    let text = std::fs::read_to_string(&path).unwrap().replace("\"t0.t1.v5\"", "\"t2.v5\"");
    std::fs::write(&path, text).unwrap();
    assert_eq!(fiblie(&["cache", "--read", p]).status.code(), Some(1));

    let mut stale = CacheFile::build(fiblie_core::AlgebraId::L, 5);
    stale.entries[4].monomials.reverse();
    stale.write(&path).unwrap();
    assert_eq!(fiblie(&["cache", "--read", p]).status.code(), Some(1));
    assert_eq!(fiblie(&["cache"]).status.code(), Some(2));
}
