use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn minor_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minor-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_fn_prints_one_row_per_function() {
    let dir = TempDir::new().unwrap();
    // x1 x2 and x1 + x2 + x3
    let f = write(&dir, "f", "# two functions\nfunction 2 8\nfunction 3 96\n");
    let o = minor_lab(&["classify", "fn", s(&f)]);
    assert!(o.status.success());
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(rows, vec!["2\t1\ttrue\t1\t1", "3\t2\ttrue\t1\t3"]);
}

#[test]
fn classify_fn_reports_witness_for_composite() {
    let dir = TempDir::new().unwrap();
    // (x1 ∨ x2) ∧ x3 ∧ x4
    let f = write(&dir, "f", "function 4 e000\n");
    let o = minor_lab(&["classify", "fn", s(&f)]);
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    let cols: Vec<&str> = row.split('\t').collect();
    assert_eq!(&cols[..3], ["4", "1", "false"]);
    assert_eq!(cols.len(), 7);
}

#[test]
fn classify_graph_and_hypergraph() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5", "hypergraph 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
    let o = minor_lab(&["classify", "graph", s(&c5)]);
    assert_eq!(stdout(&o), "C5\n");
    let p4 = write(&dir, "p4", "hypergraph 4\n1 2\n2 3\n3 4\n");
    let o = minor_lab(&["classify", "graph", s(&p4)]);
    assert!(stdout(&o).starts_with("Reducible\t"));
    let sym = write(&dir, "sym", "hypergraph 3\n1 2\n1 3\n2 3\nempty\n");
    let o = minor_lab(&["classify", "hypergraph", s(&sym)]);
    assert_eq!(stdout(&o).lines().nth(1), Some("true\t0\t0\tcase3(c=1)"));
    let big = write(&dir, "big", "hypergraph 3\n1 2 3\n");
    assert_eq!(minor_lab(&["classify", "graph", s(&big)]).status.code(), Some(2));
}

#[test]
fn steiner_builtins() {
    for name in ["fano", "ag9"] {
        let o = minor_lab(&["steiner", "check", name]);
        assert!(o.status.success());
        let row = stdout(&o).lines().nth(1).unwrap().to_string();
        assert!(row.contains("\ttrue\ttrue\ttrue\t"), "{row}");
    }
    assert_eq!(minor_lab(&["steiner", "check", "sts13"]).status.code(), Some(2));
}

#[test]
fn steiner_from_file_and_non_steiner_input() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4", "hypergraph 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let o = minor_lab(&["steiner", "check", s(&k4)]);
    assert_eq!(stdout(&o).lines().nth(1), Some("2-(4,2,1)\ttrue\ttrue\ttrue\t6\t6"));
    let bad = write(&dir, "bad", "hypergraph 4\n1 2\n");
    assert_eq!(minor_lab(&["steiner", "check", s(&bad)]).status.code(), Some(2));
}

#[test]
fn minor_test_direction() {
    let dir = TempDir::new().unwrap();
    let and = write(&dir, "and", "function 2 8\n");
    let x = write(&dir, "x", "function 1 2\n");
    assert_eq!(stdout(&minor_lab(&["minor", "test", s(&and), s(&x)])), "true\n");
    assert_eq!(stdout(&minor_lab(&["minor", "test", s(&x), s(&and)])), "false\n");
}

#[test]
fn enumerate_is_deterministic_across_jobs() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.tsv");
    let b = dir.path().join("b.tsv");
    let o = minor_lab(&["--jobs", "1", "enumerate", "--max-arity", "3", "--out", s(&a)]);
    assert_eq!(stdout(&o), "classes=80\tlevels=3\n");
    minor_lab(&["--jobs", "3", "enumerate", "--max-arity", "3", "--out", s(&b)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let o = minor_lab(&["enumerate", "--max-arity", "5", "--out", s(&a)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites_and_usage_errors() {
    let o = minor_lab(&["verify", "steiner"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("suite=steiner\t"));
    let o = minor_lab(&["--seed", "5", "verify", "quasiorder"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("seed=5"));
    assert_eq!(minor_lab(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(minor_lab(&["classify"]).status.code(), Some(2));
    assert_eq!(minor_lab(&["classify", "fn", "/no/such/file"]).status.code(), Some(2));
}
