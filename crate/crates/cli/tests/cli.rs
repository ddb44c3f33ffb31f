use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn setgame(args: &[&str]) -> Output {
    setgame_with_input(args, "")
}

fn setgame_with_input(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_setgame"))
        .args(args)
        .env_remove("SETGAME_THREADS")
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

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn graph_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn classify_set() {
    let o = setgame(&["classify", "--set", "{{},{{}}}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "winner=I w=1\n");
}

#[test]
fn classify_code_json() {
    let o = setgame(&["classify", "--code", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["set"], "{{{}}}");
    assert_eq!(v["winner"], "II");
    assert_eq!(v["w"], 2);
}

#[test]
fn malformed_set_is_a_domain_error() {
    let o = setgame(&["classify", "--set", "{{}"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: parse error"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(setgame(&["classify"]).status.code(), Some(2));
    assert_eq!(setgame(&["census", "--rank", "x"]).status.code(), Some(2));
    assert_eq!(
        setgame(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        setgame(&["model", "build", "--seed", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        setgame(&["graph", "quotient", "--file", "-", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn census_both_matches() {
    let o = setgame(&["census", "--rank", "5", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("3\t28672\n"));
    assert!(text.ends_with("match: yes\n"));
}

#[test]
fn census_csv_layout() {
    let o = setgame(&["census", "--rank", "3", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "m,nu,count,ratio_num,ratio_den\n3,0,1,1,4\n3,1,2,1,2\n3,2,1,1,4\n"
    );
}

#[test]
fn infeasible_rank_explains_itself() {
    let o = setgame(&["census", "--rank", "6", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--method formula"));
    let o = setgame(&["census", "--rank", "7"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn prob_reports_seven_sixteenths() {
    let o = setgame(&["prob", "--max-rank", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("m=5\nnu\tratio\tdistance\n0\t1/65536\t1/65536\n1\t1/2\t0\n"));
    assert!(stdout(&o).contains("3\t7/16\t1/16\n"));
}

#[test]
fn enumerate_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("levels.txt");
    let cache = cache.to_str().unwrap();
    let first = setgame(&["enumerate", "--rank", "4", "--cache", cache]);
    assert_eq!(first.status.code(), Some(0));
    assert!(std::fs::read_to_string(cache)
        .unwrap()
        .starts_with("setgame-level-table 4\n"));
    let second = setgame(&["enumerate", "--rank", "3", "--cache", cache]);
    assert_eq!(stdout(&second).lines().count(), 4);
    assert_eq!(
        stdout(&second).lines().nth(3),
        Some("3\t{{},{{}}}\twinner=I w=1")
    );
    std::fs::write(cache, "not a table\n").unwrap();
    let broken = setgame(&["enumerate", "--rank", "3", "--cache", cache]);
    assert_eq!(broken.status.code(), Some(1));
    assert!(stderr(&broken).contains("not a level table"));
}

#[test]
fn graph_solve_text_and_json() {
    let f = graph_file("node x: u\nnode u: u e\nnode e:\npoint x\n");
    let path = f.path().to_str().unwrap();
    let o = setgame(&["graph", "solve", "--file", path]);
    assert_eq!(
        stdout(&o),
        "x: WIN_II w=2\nu: WIN_I w=1\ne: WIN_II w=0\npoint x: WIN_II w=2\n"
    );
    let o = setgame(&["graph", "solve", "--file", path, "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["point"]["kind"], "WIN_II");
    let draw = graph_file("node q: q\n");
    let o = setgame(&[
        "graph",
        "solve",
        "--file",
        draw.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&o), "id,kind,w\nq,DRAW,\n");
}

#[test]
fn graph_from_stdin() {
    let o = setgame_with_input(
        &["graph", "sigma", "--file", "-"],
        "node x: u\nnode u: u e\nnode e:\n",
    );
    assert_eq!(stdout(&o), "x: WIN_II w=2\nspectrum: {2}\n");
}

#[test]
fn bad_graph_names_the_line() {
    let f = graph_file("node x: y\n");
    let o = setgame(&["graph", "solve", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("line 1: unknown node `y`"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn graph_quotient_and_witness() {
    let f = graph_file("node a: b\nnode b: a\n");
    let o = setgame(&["graph", "quotient", "--file", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "node a: a\n# class a a\n# class b a\n");
    let o = setgame(&["graph", "witness", "--nu", "2"]);
    assert_eq!(
        stdout(&o),
        "node v0:\nnode v1: v0 v1\nnode v2: v1\npoint v2\n"
    );
    assert_eq!(
        setgame(&["graph", "witness", "--nu", "1"]).status.code(),
        Some(1)
    );
}

#[test]
fn graph_pattern_json() {
    let f = graph_file("node q: q\nnode e:\nnode x: q e\n");
    let o = setgame(&[
        "graph",
        "pattern",
        "--file",
        f.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pattern"], "ALL!=W!=HW=WF");
}

#[test]
fn model_build_and_check() {
    let o = setgame(&["model", "build", "--seed", "quine", "--stages", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("node "))
            .count(),
        4
    );
    let o = setgame(&["model", "check", "--seed", "quine", "--stages", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("sigma(W_II): M_1=false M_2=false"), "{text}");
    assert!(text.contains("thickness(0): pass"));
    let o = setgame(&["model", "build", "--seed", "quine", "--stages", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("raise --cap"));
}

#[test]
fn model_from_seed_file() {
    let f = graph_file("node u: u e\nnode e:\n");
    let o = setgame(&[
        "model",
        "check",
        "--file",
        f.path().to_str().unwrap(),
        "--stages",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pattern"]["pattern"], "ALL=W=HW!=WF");
    let bad = graph_file("node a:\nnode b:\n");
    let o = setgame(&["model", "build", "--file", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("seed rejected"));
}

#[test]
fn verify_selected_checks() {
    let o = setgame(&["verify", "--suite", "witness-indices,census-oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "witness-indices: PASS\ncensus-oracle: PASS\n");
    let o = setgame(&["verify", "--suite", "census-oracle", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v[0];
    assert_eq!(r["check"], "census-oracle");
    assert_eq!(r["status"], "pass");
    assert!(r["runtime_ms"].is_u64());
    assert!(r["evidence"]["tables"].is_array());
}

#[test]
fn verify_is_stable_across_thread_counts() {
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_str(&stdout(o)).unwrap();
        for r in v.as_array_mut().unwrap() {
            r["runtime_ms"] = Value::Null;
        }
        v
    };
    let args = [
        "verify",
        "--suite",
        "sigma-spectrum,probability-trend",
        "--format",
        "json",
    ];
    let one = setgame(&[&args[..], &["--threads", "1"]].concat());
    let four = setgame(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(strip(&one), strip(&four));
}

#[test]
fn play_set_engine_wins_as_second_player() {
    let o = setgame_with_input(&["play", "--set", "{{{}}}"], "0\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("ply 1: position {{{}}} w=2 (I to move, II wins)"),
        "{text}"
    );
    assert!(text.contains("II plays {}"), "{text}");
    assert!(text.ends_with("I cannot move; II wins\n"), "{text}");
}

#[test]
fn play_graph_with_draw_limit() {
    let f = graph_file("node q: q\n");
    let path = f.path().to_str().unwrap();
    let o = setgame_with_input(
        &["play", "--graph", path, "--node", "q", "--max-plies", "3"],
        "0\n0\n",
    );
    let text = stdout(&o);
    assert!(text.contains("w=none (I to move, drawn)"), "{text}");
    assert!(text.contains("II plays q"), "{text}");
    assert!(
        text.ends_with("ply limit 3 reached; game drawn\n"),
        "{text}"
    );
}

#[test]
fn play_graph_by_id() {
    let f = graph_file("node x: u\nnode u: u e\nnode e:\n");
    let path = f.path().to_str().unwrap();
    let o = setgame_with_input(&["play", "--graph", path, "--node", "x"], "u\n");
    let text = stdout(&o);
    assert!(text.contains("II plays e"), "{text}");
    assert!(text.ends_with("I cannot move; II wins\n"), "{text}");
}
