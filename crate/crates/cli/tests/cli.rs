use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_embhom"))
        .current_dir(data(""))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_embhom"))
        .current_dir(data(""))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn assert_golden(args: &[&str], name: &str) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out), golden(name), "output of {args:?} drifted from {name}");
}

#[test]
fn golden_outputs() {
    assert_golden(&["homology", "example.hg", "--coeff", "z"], "homology_example_z.json");
    assert_golden(&["homology", "example.hg", "--coeff", "q", "--format", "csv"], "homology_example_q.csv");
    assert_golden(&["acyclic", "faces3.hg", "--trace"], "acyclic_faces3.json");
    assert_golden(&["acyclic", "triangle.hg", "--trace"], "acyclic_triangle.json");
    assert_golden(&["acyclic", "two_triangles.hg", "--trace"], "acyclic_two_triangles.json");
    assert_golden(
        &["persist", "triangle.hg", "--distmat", "unit.csv", "--radii", "1/2,3/2"],
        "persist_triangle.json",
    );
    assert_golden(
        &["persist", "triangle.hg", "--distmat", "unit.csv", "--radii", "1/2,3/2", "--format", "csv"],
        "persist_triangle.csv",
    );
    assert_golden(&["conn", "edge.hg"], "conn_edge.json");
    assert_golden(&["mv", "mv_left.hg", "mv_right.hg"], "mv_pair.json");
    assert_golden(&["diff", "path.hg", "--vals", "phi.vals", "--seed", "3"], "diff_path.json");
    assert_golden(&["info", "example.hg"], "info_example.json");
    assert_golden(&["--format", "text", "closure", "example.hg"], "closure_example.hg");
}

#[test]
fn worked_example_ranks() {
    let out = run(&["homology", "example.hg", "--coeff", "z"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let ranks: Vec<u64> = v["groups"].as_array().unwrap().iter().map(|g| g["rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, [2, 0, 0]);
    assert_eq!(v["coefficients"], "Z");
}

#[test]
fn tetrahedron_faces_are_not_acyclic() {
    let out = run(&["--format", "text", "acyclic", "faces3.hg"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "not acyclic\n");
}

#[test]
fn user_errors_exit_with_two() {
    let out = run(&["homology", "missing.hg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.hg"));
    assert!(out.stdout.is_empty());

    for args in [
        &["homology", "example.hg", "--coeff", "zp"][..],
        &["homology", "example.hg", "--coeff", "zp", "--p", "4"],
        &["homology", "example.hg", "--coeff", "q", "--p", "3"],
        &["mv", "triangle.hg", "edge.hg", "--coeff", "z"],
        &["persist", "triangle.hg", "--distmat", "unit.csv", "--radii", "1,1/2"],
        &["persist", "triangle.hg", "--distmat", "unit.csv"],
        &["diff", "path.hg", "--vals", "psi.vals", "--samples", "0"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn parse_errors_report_the_line() {
    let out = run_stdin(&["homology", "-"], "a b\nc c\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn mv_hypothesis_violation() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.hg"), dir.path().join("b.hg"));
    std::fs::write(&a, "x y\n").unwrap();
    std::fs::write(&b, "y z\n").unwrap();
    let out = run(&["mv", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypothesis"));
}

#[test]
fn stdin_input_matches_file_input() {
    let text = std::fs::read_to_string(data("example.hg")).unwrap();
    let piped = run_stdin(&["homology", "-"], &text);
    assert_eq!(stdout(&piped), golden("homology_example_z.json"));
    let twice = run_stdin(&["mv", "-", "-"], &text);
    assert_eq!(twice.status.code(), Some(2));
}

#[test]
fn closure_round_trips() {
    let out = run(&["--format", "text", "closure", "faces3.hg"]);
    let closed = stdout(&out);
    let h = embhom::parse_hypergraph(&closed).unwrap();
    assert!(embhom::SimplicialComplex::new(h.clone()).is_ok());
    let again = run_stdin(&["--format", "text", "closure", "-"], &closed);
    assert_eq!(stdout(&again), closed);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["corr", "path.hg", "--vals", "phi.vals", "--vals2", "psi.vals", "--seed", "11"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, run(&args).stdout);
    let auto = ["persist", "triangle.hg", "--points", "points.txt", "--auto-radii", "--format", "csv"];
    assert_eq!(run(&auto).stdout, run(&auto).stdout);
}

#[test]
fn auto_radii_find_the_loop() {
    let out = run(&["persist", "triangle.hg", "--points", "points.txt", "--auto-radii"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let intervals = v["intervals"].as_array().unwrap();
    assert_eq!(intervals.len(), 1);
    assert_eq!(intervals[0]["degree"], 1);
    assert_eq!(intervals[0]["death"], "inf");
    let birth = intervals[0]["birth_decimal"].as_f64().unwrap();
    assert!(birth > 2f64.sqrt() && birth < 1.415);
}

#[test]
fn text_and_csv_formats() {
    let out = run(&["--format", "text", "homology", "example.hg"]);
    assert_eq!(stdout(&out), "H_0 = Z^2\nH_1 = 0\nH_2 = 0\n");
    let out = run(&["--format", "text", "conn", "edge.hg"]);
    assert_eq!(stdout(&out), "Conn = 5/8 (0.625)\n");
    let out = run(&["--format", "csv", "info", "example.hg"]);
    assert_eq!(stdout(&out), "degree,count\n0,3\n1,1\n2,1\n");
    assert_eq!(run(&["--format", "csv", "mv", "mv_left.hg", "mv_right.hg"]).status.code(), Some(2));
}
