use std::fs;
use std::process::{Command, Output};

use gyrogroup::io::ReportDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gyrogroup"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_g2_4_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["verify", "--n", "4", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&path).unwrap();
    let doc = ReportDocument::from_json(&text).unwrap();
    assert!(doc.all_pass());
    assert!(doc.gyrocommutative);
    assert_eq!(doc.params.n, Some(4));
    assert_eq!(doc.params.order, 16);
    assert_eq!(doc.subgyrogroup_count, Some(11));
    assert_eq!(doc.gyroauto_order, 2);
    assert_eq!(doc.checks.len(), 7);
    assert_eq!(doc.to_json(), text);
    assert!(text.contains("\"gyrocommutative\": true"));
}

#[test]
fn n_below_three_is_rejected() {
    let o = run(&["build", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n >= 3"), "{}", stderr(&o));
    assert_eq!(run(&["verify", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["build"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn build_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let o = run(&[
        "build",
        "--n",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let csv = fs::read_to_string(&path).unwrap();
    assert!(csv.contains("\n8,13,10,15,12,9,14,11,0,5,2,7,4,1,6,3\n"));
    let text = stdout(&run(&["build", "--n", "3"]));
    assert!(text.starts_with("Cayley table (order 8)"));
}

#[test]
fn check_accepts_good_tables_and_reports_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.csv");
    fs::write(
        &good,
        stdout(&run(&["build", "--n", "3", "--format", "csv"])),
    )
    .unwrap();
    assert_eq!(
        run(&["check", good.to_str().unwrap()]).status.code(),
        Some(0)
    );

    // 4 ⊕ 1 = 7 becomes 6
    let csv = fs::read_to_string(&good).unwrap();
    let mut lines: Vec<String> = csv.lines().map(str::to_string).collect();
    assert_eq!(lines[5], "4,7,6,5,0,3,2,1");
    lines[5] = "4,6,6,5,0,3,2,1".to_string();
    let bad = dir.path().join("bad.csv");
    fs::write(&bad, lines.join("\n") + "\n").unwrap();
    let report = dir.path().join("bad.json");
    let o = run(&[
        "check",
        bad.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let doc = ReportDocument::from_json(&fs::read_to_string(&report).unwrap()).unwrap();
    let assoc = doc
        .checks
        .iter()
        .find(|c| c.name.name() == "left_gyroassociativity")
        .unwrap();
    assert_eq!(assoc.witness.as_ref().map(Vec::len), Some(3));
    assert!(stdout(&o).contains("FAIL"));
    assert!(stderr(&o).contains("latin"));
}

#[test]
fn check_reports_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("short.csv");
    let csv = stdout(&run(&["build", "--n", "3", "--format", "csv"]));
    fs::write(
        &path,
        csv.replacen("1,2,3,0,5,6,7,4\n", "1,2,3,0,5,6,7\n", 1),
    )
    .unwrap();
    let o = run(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    assert_eq!(
        run(&["check", "/nonexistent/tables.csv"]).status.code(),
        Some(2)
    );
}

#[test]
fn lattice_dot() {
    let o = run(&["lattice", "--n", "3", "--dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph lattice {"));
    assert_eq!(dot.matches(" -> ").count(), 11);
    assert_eq!(dot.matches("[label=").count(), 8);
    assert!(dot.contains("not a group"));
}

#[test]
fn holomorph_names_the_candidate() {
    let o = run(&["holomorph", "--n", "4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("32"));
    assert!(out.contains("modular"));
}

#[test]
fn iso_between_files() {
    let dir = tempfile::tempdir().unwrap();
    let left = dir.path().join("l.csv");
    let right = dir.path().join("r.csv");
    fs::write(
        &left,
        stdout(&run(&["build", "--n", "3", "--format", "csv"])),
    )
    .unwrap();
    fs::write(
        &right,
        stdout(&run(&["build", "--n", "3", "--format", "csv"])),
    )
    .unwrap();
    let (l, r) = (left.to_str().unwrap(), right.to_str().unwrap());
    let o = run(&["iso", "--left", l, "--right", r]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("isomorphic"));
    fs::write(
        &right,
        stdout(&run(&["build", "--n", "4", "--format", "csv"])),
    )
    .unwrap();
    let o = run(&["iso", "--left", l, "--right", r]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not isomorphic"));
}
