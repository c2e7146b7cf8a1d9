use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use toricsq::Report;

fn toricsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toricsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_cp2_json() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cp2.txt", "# projective plane\n1 0\n0 1\n-1 -1\n");
    let v = json(&toricsq(&["analyze", s(&f), "--json"]));
    assert_eq!(v["sq2"], true);
    assert_eq!(v["splitting"], serde_json::json!([{"kind": "suspended_cp2"}]));
    for key in [
        "edges", "det_table", "g", "betti2", "smooth_vertices_p2", "sq1_h2", "sq1_h3", "sq2",
        "criterion_terms", "witness_vertex", "splitting", "spin", "cup_form", "warnings",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn analyze_round_trips_through_edges() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.txt", "1 2\n1 0\n1 -2\n3 1\n");
    let out = toricsq(&["analyze", s(&f), "--json", "--prime", "3", "--prime", "5"]);
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    let rebuilt = Report::build(&report.pair(), &report.extra_primes()).unwrap();
    assert_eq!(report, rebuilt);
    assert!(report.smooth_vertices_by_prime.contains_key(&5));
}

#[test]
fn analyze_text_output() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f2.txt", "1 0\n0 1\n-1 2\n0 -1\n");
    let out = toricsq(&["analyze", s(&f)]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sq2         false"));
    assert!(text.contains("spin        true"));
}

#[test]
fn compare_is_reflexive() {
    let dir = TempDir::new().unwrap();
    for body in ["1 0\n0 1\n-1 -1\n", "1 2\n1 0\n1 -2\n", "1 0\n1 3\n2 3\n"] {
        let f = write(&dir, "a.txt", body);
        let v = json(&toricsq(&["compare", s(&f), s(&f)]));
        let tier = v["tier"].as_str().unwrap();
        assert!(
            ["StablyEquivalent", "HomotopyInconclusive", "HomotopyEquivalent"].contains(&tier),
            "{tier}"
        );
    }
}

#[test]
fn compare_detects_differences() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "1 0\n0 1\n-1 -1\n");
    let b = write(&dir, "b.txt", "1 0\n0 1\n-2 -3\n");
    let c = write(&dir, "c.txt", "1 0\n0 1\n-1 1\n0 -1\n");
    assert_eq!(json(&toricsq(&["compare", s(&a), s(&b)]))["tier"], "StablyInequivalent");
    assert_eq!(json(&toricsq(&["compare", s(&a), s(&c)]))["tier"], "GradedGroupsDiffer");
}

#[test]
fn contract_and_cup() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f1.txt", "1 0\n0 1\n-1 1\n0 -1\n");
    let v = json(&toricsq(&["contract", s(&f), "--edge", "1"]));
    assert_eq!(v["triple"]["vectors"], serde_json::json!([[1, 0], [-1, 1], [0, -1]]));
    assert_eq!(v["sq2"], true);
    assert_eq!(v["classification"]["kind"], "ToricOrbifoldTriangle");
    let v = json(&toricsq(&["cup", s(&f)]));
    assert_eq!(v["Available"]["entries"], serde_json::json!([[1, 1], [1, 0]]));

    let t = write(&dir, "t.txt", "1 0\n1 2\n1 -2\n");
    assert_eq!(toricsq(&["contract", s(&t), "--edge", "1"]).status.code(), Some(1));
    let v = json(&toricsq(&["contract", s(&t), "--edge", "1", "--normalize"]));
    assert_eq!(v["g_i"], 2);
    assert_eq!(json(&toricsq(&["cup", s(&t)]))["Unavailable"], "TorsionPresent");
}

#[test]
fn census_filters_and_stdout() {
    let out = toricsq(&["census", "--edges", "3", "--bound", "2", "--filter", "g-even"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.is_empty());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["g"].as_i64().unwrap() % 2, 0);
        assert_eq!(v["sq2"], false);
    }
}

#[test]
fn selfcheck_triangles() {
    let out = toricsq(&["selfcheck", "--edges", "3", "--bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("0 violations"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let dependent = write(&dir, "d.txt", "1 0\n1 0\n0 1\n");
    let short = write(&dir, "s.txt", "1 0\n0 1\n");
    let garbage = write(&dir, "g.txt", "1 0\nzero one\n1 1\n");
    assert_eq!(toricsq(&["analyze", s(&dependent)]).status.code(), Some(1));
    assert_eq!(toricsq(&["analyze", s(&short)]).status.code(), Some(1));
    let out = toricsq(&["analyze", s(&garbage)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(toricsq(&["analyze", "/nonexistent/pair.txt"]).status.code(), Some(1));

    assert_eq!(toricsq(&[]).status.code(), Some(2));
    assert_eq!(toricsq(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(toricsq(&["census", "--edges", "2", "--bound", "1"]).status.code(), Some(2));
    assert_eq!(toricsq(&["census", "--edges", "3", "--bound", "1", "--filter", "odd"]).status.code(), Some(2));
    let cp2 = write(&dir, "cp2.txt", "1 0\n0 1\n-1 -1\n");
    assert_eq!(toricsq(&["analyze", s(&cp2), "--prime", "4"]).status.code(), Some(2));
    assert_eq!(toricsq(&["contract", s(&cp2), "--edge", "2"]).status.code(), Some(1));
}
