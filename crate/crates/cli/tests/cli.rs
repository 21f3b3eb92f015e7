use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use poset_gaps::classify::gen_doublefull;
use poset_gaps::format::parse;
use poset_gaps::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_poset-gaps"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn analyze_weird_json_matches_golden() {
    let out = run(&["analyze", golden("weird.poset").to_str().unwrap(), "--geometry", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let got: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let want: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(golden("weird.json")).unwrap()).unwrap();
    assert_eq!(got, want);

    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.gap_sequence, ["1", "2", "4", "6", "6"]);
    let k2 = report.indices.iter().find(|i| i.k == 2).unwrap();
    assert_eq!(k2.tag, "Doubling");
    let geo = report.geometry.as_ref().unwrap();
    let w = geo.indices.iter().find(|g| g.k == 2).unwrap();
    let half = w.witnesses.iter().find(|w| w.a == "1/2").unwrap();
    assert!(half.feasible);
    assert_eq!(half.v_xy.as_deref(), Some("1/4"));
    // lossless round trip
    let again = serde_json::to_value(&report).unwrap();
    assert_eq!(again, got);
}

#[test]
fn analyze_text_and_focus() {
    let path = golden("weird.poset");
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1, 2, 4, 6, 6)"));
    assert!(text.contains("Doubling"));

    let out = run(&["analyze", path.to_str().unwrap(), "--k", "3", "--format", "json"]);
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.indices.len(), 1);
    assert_eq!(report.indices[0].k, 3);

    let out = run(&["analyze", path.to_str().unwrap(), "--k", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mark_violation_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "bad.poset", "[elements]\na b\n[covers]\na < b\n[mark]\ny = a\nx = b\n");
    let out = run(&["analyze", &f]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("x"));
}

#[test]
fn cycle_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "cyc.poset", "[elements]\na b c\n[covers]\na < b\nb < a\n[mark]\nx = a\ny = c\n");
    assert_eq!(run(&["analyze", &f]).status.code(), Some(3));
}

#[test]
fn parse_error_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "undeclared.poset", "[elements]\na b\n[covers]\na < q\n[mark]\nx = a\ny = b\n");
    let out = run(&["analyze", &f]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");
    assert!(err.contains("column 5"), "{err}");
}

#[test]
fn missing_file_exits_2() {
    assert_eq!(run(&["analyze", "/nonexistent/poset"]).status.code(), Some(2));
}

#[test]
fn sweep_small_all_checks() {
    let out = run(&["sweep", "--n", "4", "--checks", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["sweep", "--n", "4", "--checks", "main-theorems", "--jobs", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["posets_visited"], 3 + 19 + 219);
    assert_eq!(v["failures"], 0);
}

#[test]
fn sweep_n6_main_theorems() {
    let out = run(&["sweep", "--n", "6", "--checks", "main-theorems"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn sweep_bad_flags() {
    assert_eq!(run(&["sweep", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--n", "3", "--checks", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["sweep"]).status.code(), Some(2));
}

#[test]
fn gen_weird_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("w.poset");
    let out = run(&["gen", "weird", "--out", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let m = parse(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(m, poset_gaps::classify::gen_weird());
    assert_eq!(m.len(), 6);
}

#[test]
fn gen_doublefull_file() {
    let out = run(&["gen", "doublefull", "6", "3", "6", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let m = parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(m.len(), 11);
    assert_eq!(m, gen_doublefull(6, 3, 6, 2, 2).unwrap());

    let out = run(&["gen", "doublefull", "2", "1", "3", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
