use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use stillman_cli::{parse_input, REPORT_KEYS};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_mgstill"));
    c.env_remove("MGSTILL_MAX_PAIRS");
    c
}

fn input(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("inputs")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(mut cmd: Command, stdin: &[u8]) -> Output {
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn pipe(first: &[&str], second: &[&str]) -> Output {
    let out = run(first);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let mut cmd = bin();
    cmd.args(second);
    run_stdin(cmd, &out.stdout)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_line(o: &Output) -> Value {
    let text = stdout(o);
    let mut lines = text.lines();
    let v = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert!(lines.next().is_none());
    v
}

#[test]
fn monoid_check_hirzebruch() {
    let out = run(&["monoid-check", "--gens", "(1,0);(-2,1);(0,1)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "pointed: yes, bounded factorization: yes, witness: (1,3)\n");
    let out = run(&["monoid-check", &input("hirzebruch.txt")]);
    assert_eq!(stdout(&out), "pointed: yes, bounded factorization: yes, witness: (1,3)\n");
    let out = run(&["--format", "json-lines", "monoid-check", "--gens", "(1,0);(-1,0);(0,1)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_line(&out);
    assert_eq!(v["pointed"], false);
    assert_eq!(v["bounded_factorization"], false);
    assert!(v["witness"].is_null());
    assert_eq!(v["certificate"]["relation"].as_array().unwrap().len(), 2);
}

#[test]
fn monoid_check_reports_degree_zero_variables() {
    let out = run(&["monoid-check", &input("non_connected.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("degree-zero variables: x"));
}

#[test]
fn family_pipes_into_pdim() {
    for (n, expected) in [(1, "3"), (2, "4"), (3, "5")] {
        let out = pipe(&["family", "mccullough", "--n", &n.to_string()], &["pdim"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), expected, "McCullough n = {n}");
    }
    for (n, expected) in [(2, "4"), (3, "5")] {
        let out = pipe(&["family", "burch-kohn", "--n", &n.to_string()], &["pdim", "-"]);
        assert_eq!(stdout(&out).trim(), expected, "Burch-Kohn n = {n}");
    }
    let out = pipe(&["family", "mccullough", "--n", "2"], &["pdim", "--field", "QQ"]);
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn counterexample_pipes_into_pdim() {
    for b in [2usize, 3] {
        let out = pipe(
            &["counterexample", "--gens", "(1,0);(-1,0);(0,1)", "--b", &b.to_string()],
            &["pdim"],
        );
        assert_eq!(stdout(&out).trim(), (b + 2).to_string());
    }
    let out = run(&["counterexample", "--gens", "(1,0);(0,1)", "--b", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("bounded factorization"));
}

#[test]
fn family_output_parses() {
    let out = run(&["family", "burch-kohn", "--n", "3"]);
    let (ring, ideal) = parse_input(&stdout(&out)).unwrap();
    assert_eq!(ring.nvars(), 6);
    assert_eq!(ideal.unwrap().generators().len(), 3);
    let out = run(&["--format", "json-lines", "family", "mccullough", "--n", "3"]);
    let v = json_line(&out);
    assert!(parse_input(v["input"].as_str().unwrap()).is_ok());
}

#[test]
fn report_on_three_cubics() {
    let out = run(&["--format", "json-lines", "report", &input("three_cubics.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_line(&out);
    assert_eq!(v["hilbert_bound"], 18);
    assert_eq!(v["pdim"], 3);
    assert_eq!(v["known_bound"]["bound"], 5);
    assert_eq!(v["regular_sequence"], true);
    assert_eq!(v["finest_rank"], 15);
    assert_eq!(v["flattened_degrees"], serde_json::json!([3, 3, 3]));
    let text = stdout(&run(&["report", &input("three_cubics.txt")]));
    assert!(text.contains("hilbert bound: 18"));
    assert!(text.contains("known bound: 5"));
}

#[test]
fn report_keys_are_always_present() {
    let cases: Vec<Vec<String>> = vec![
        vec!["report".into(), input("hirzebruch.txt")],
        vec!["report".into(), "--no-pdim".into(), input("hirzebruch.txt")],
        vec!["report".into(), input("non_connected.txt")],
        vec!["report".into(), input("ring_only.txt")],
        vec!["report".into(), "/nonexistent/file.txt".into()],
    ];
    for args in cases {
        let mut all = vec!["--format".to_string(), "json-lines".to_string()];
        all.extend(args.clone());
        let refs: Vec<&str> = all.iter().map(String::as_str).collect();
        let v = json_line(&run(&refs));
        for key in REPORT_KEYS {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}: {v}");
        }
    }
    let v = json_line(&run(&["--format", "json-lines", "report", "--no-pdim", &input("hirzebruch.txt")]));
    assert!(v["pdim"].is_null());
}

#[test]
fn non_connected_report_is_rejected() {
    let out = run(&["report", &input("non_connected.txt")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not connected"));
    assert!(stdout(&out).is_empty());
    let out = run(&["counterexample", "--gens", "(1,0);(-1,0)", "--b", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_2() {
    let bad = run_stdin(
        {
            let mut c = bin();
            c.arg("pdim");
            c
        },
        b"ring\n  field QQ\n  rank 1\n  var x deg (1)\nideal\n  gen y\n",
    );
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("line 6, column 7"));
    assert_eq!(run(&["monoid-check", "--gens", "(1,0);(1"]).status.code(), Some(2));
    assert_eq!(run(&["monoid-check", "--gens", "(1,0);(1)"]).status.code(), Some(2));
    assert_eq!(run(&["family", "burch-kohn", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["counterexample", "--gens", "(1,0);(-1,0)", "--b", "1"]).status.code(), Some(2));
    assert_eq!(run(&["pdim", &input("hirzebruch.txt"), "--weight", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["pdim", &input("hirzebruch.txt"), "--field", "GF(6)"]).status.code(), Some(2));
    assert_eq!(run(&["report", &input("hirzebruch.txt"), "--degrees", "(1,1)"]).status.code(), Some(2));
    assert_eq!(run(&["pdim", &input("ring_only.txt")]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["family", "mccullough"]).status.code(), Some(2));
}

#[test]
fn inhomogeneous_weight_is_rejected() {
    let out = run(&["pdim", &input("hirzebruch.txt")]);
    // x3 - x0^2*x1 is not homogeneous for all-ones weights
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("homogeneous"));
    // w = (1,3) · deg: x0, x2 -> 1, x1 -> 1, x3 -> 3
    let out = run(&["pdim", &input("hirzebruch.txt"), "--weight", "1,1,1,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn pair_cap_from_environment() {
    let mut c = bin();
    c.args(["pdim", &input("three_cubics.txt")]).env("MGSTILL_MAX_PAIRS", "0");
    let out = c.output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("pair"));
    let mut c = bin();
    c.args(["pdim", &input("three_cubics.txt")]).env("MGSTILL_MAX_PAIRS", "many");
    assert_eq!(c.output().unwrap().status.code(), Some(2));
    let mut c = bin();
    c.args(["pdim", &input("three_cubics.txt")]).env("MGSTILL_MAX_PAIRS", "100000");
    let out = c.output().unwrap();
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn refine_output_feeds_report() {
    let out = pipe(&["refine", &input("three_cubics.txt")], &["--format", "json-lines", "report"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_line(&out);
    assert_eq!(v["pdim"], 3);
    assert_eq!(v["finest_rank"], 15);
    let text = stdout(&run(&["refine", &input("hirzebruch.txt")]));
    assert!(text.starts_with("# finest grading rank 2, torsion 3"));
    assert!(text.contains("factors through it: yes"));
}
