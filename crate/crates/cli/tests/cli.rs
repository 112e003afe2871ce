use std::io::Write;
use std::process::{Command, Output, Stdio};

use rainbow_arrow::graph6;
use rainbow_arrow::iso::are_isomorphic;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow-arrow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rainbow-arrow"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let o = run(&[&["gen"], args].concat());
    assert!(o.status.success());
    stdout(&o).trim().to_string()
}

#[test]
fn gen_prints_graph6() {
    let p = graph6::parse(&gen(&["petersen"])).unwrap();
    let reference = graph6::parse("IheA@GUAo").unwrap();
    assert!(are_isomorphic(&p, &reference).unwrap());
    assert_eq!(gen(&["complete", "2"]), "A_");
    assert_eq!(gen(&["cycle", "5", "--complement"]).len(), 3);
    let bad = run(&["gen", "star", "2"]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn arrows_exit_codes() {
    let c5 = gen(&["cycle", "5"]);
    let p4 = gen(&["path", "4"]);
    let c6 = gen(&["cycle", "6"]);
    let p3 = gen(&["path", "3"]);
    let lambda = gen(&["lambda"]);
    let c8 = gen(&["cycle", "8"]);

    assert_eq!(run(&["arrows", &c5, &p4]).status.code(), Some(0));
    assert_eq!(run(&["arrows", &c6, &p3]).status.code(), Some(1));
    assert_eq!(run(&["arrows", &c8, &lambda]).status.code(), Some(2));
    let fallback = run(&["arrows", "--oracle", &c8, &lambda]);
    assert_eq!(fallback.status.code(), Some(1));
    assert!(stdout(&fallback).contains("provenance: oracle"));
}

#[test]
fn oracle_reports_counterexample() {
    let o = run(&["oracle", &gen(&["cycle", "6"]), &gen(&["path", "3"])]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample: {0,1,3,4}{2}{5}"));
    let o = run(&[
        "oracle",
        "--budget",
        "5",
        &gen(&["petersen"]),
        &gen(&["petersen", "--prime"]),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stdin_and_parse_errors() {
    let input = format!("{}\n{}\n", gen(&["cycle", "5"]), gen(&["path", "4"]));
    let o = run_with_stdin(&["arrows", "-", "-"], &input);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let o = run(&["classify", "C~~"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph6"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn classify_and_deck() {
    let o = run(&["classify", &gen(&["petersen", "--prime"])]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("f: 10"));
    let o = run(&["classify", &gen(&["path", "4"])]);
    assert!(stdout(&o).contains("f: 5"));
    let o = run(&["deck", "IheA@GUAo"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "petersen"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("RESULT\tpetersen\t750\t0\t"));
    let o = run(&["verify", "main-theorem", "--k-max", "3", "--n-max", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("RESULT\tmain-theorem\t"));
    assert_eq!(run(&["verify", "hoffman-singleton"]).status.code(), Some(3));
    assert_eq!(
        run(&["verify", "bosak", "--n-max", "9"]).status.code(),
        Some(3)
    );
}
