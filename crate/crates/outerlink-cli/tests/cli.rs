use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_outerlink"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(out)).expect("stdout is one JSON document")
}

#[test]
fn classify_k5_json_flags() {
    let out = run(&["classify", "K5", "--format", "json"]);
    assert!(out.status.success());
    let doc = json(&out);
    let c = &doc["classification"];
    assert_eq!(c["intrinsically_s1_linked"], true);
    assert_eq!(c["intrinsically_outer_linked"], true);
    assert_eq!(c["outer_flat_and_linkless"], false);
    assert_eq!(doc["input"]["labels"][0], "a");
    assert_eq!(
        c["witnesses"]["planarity_obstruction"]["kind"],
        "K5"
    );
}

#[test]
fn classify_path_graph_has_no_linking() {
    let out = run(&["classify", "P3", "--format", "json"]);
    assert!(out.status.success());
    let c = &json(&out)["classification"];
    assert_eq!(c["intrinsically_s1_linked"], false);
    assert_eq!(c["intrinsically_outer_linked"], false);
    assert_eq!(c["outerplanar"], true);
}

#[test]
fn classify_edge_list_on_stdin() {
    let out = run_stdin(
        &["classify", "-", "--format", "json"],
        "a 1\na 2\nb 1\nb 2\nc 1\nc 2\n",
    );
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["input"]["vertices"], 5);
    assert_eq!(doc["input"]["labels"][3], "b");
    let c = &doc["classification"];
    assert_eq!(c["intrinsically_s1_linked"], true);
    assert_eq!(c["planar"], true);
}

#[test]
fn classify_graph6_on_stdin() {
    let out = run_stdin(&["classify", "-", "--format", "json"], "D~{\n");
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["input"]["vertices"], 5);
    assert_eq!(doc["input"]["edges"], 10);
    assert_eq!(doc["classification"]["planar"], false);
}

#[test]
fn parse_errors_carry_line_numbers_and_exit_2() {
    let out = run_stdin(&["classify", "-"], "a a\n");
    assert_eq!(out.status.code(), Some(2));
    let err = std::str::from_utf8(&out.stderr).unwrap();
    assert!(err.contains("line 1"), "{err}");
    assert!(err.contains("self-loop"), "{err}");
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = [
        "verify",
        "k5-parity",
        "--trials",
        "3",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let doc = json(&first);
    assert_eq!(doc["seed"], 7);
    assert_eq!(doc["sweep"]["passed"], true);
    assert_eq!(doc["sweep"]["checked"], 36);
}

#[test]
fn witness_impossibility_exits_1_with_reason() {
    let out = run(&["witness", "linkless-diagram", "K5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["witness"]["found"], false);
    assert!(doc["witness"]["impossibility"]
        .as_str()
        .unwrap()
        .contains("parity sum is 1"));
}

#[test]
fn witness_linkless_diagram_for_planar_graph() {
    let out = run(&["witness", "linkless-diagram", "K4", "--format", "json"]);
    assert!(out.status.success());
    let doc = json(&out);
    let cert = &doc["witness"]["certificate"]["linkless_diagram"];
    assert_eq!(cert["crossings"], 1);
    assert!(cert["text"].as_str().unwrap().starts_with("order "));
}

#[test]
fn unknown_theorem_is_a_usage_error() {
    let out = run(&["verify", "zorn-lemma"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_failure_diagnoses_counterexamples() {
    // A too-large --n is a flag error, not a sweep failure.
    let out = run(&["verify", "s1-equivalence", "--n", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_outer_equivalence_small() {
    let out = run(&[
        "verify",
        "outer-equivalence",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["sweep"]["checked"], 18);
    assert_eq!(doc["sweep"]["passed"], true);
}

#[test]
fn text_report_is_a_table() {
    let out = run(&["classify", "K4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("outerplanar"));
    assert!(text.contains("no"));
    assert!(text.contains("elapsed"));
}

#[test]
fn jobs_flag_keeps_reports_stable() {
    let base = run(&[
        "verify",
        "expansion-preservation",
        "--format",
        "json",
        "--jobs",
        "1",
    ]);
    let wide = run(&[
        "verify",
        "expansion-preservation",
        "--format",
        "json",
        "--jobs",
        "3",
    ]);
    assert!(base.status.success());
    assert_eq!(base.stdout, wide.stdout);
}
