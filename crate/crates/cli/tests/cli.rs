use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use subgraph_cli::{census_exit_code, dump_mismatches, EXIT_ERROR, EXIT_MISMATCH, EXIT_OK};
use subgraph_core::document::{AnalysisDocument, CensusRecord};
use subgraph_core::harness::{CensusEntry, CensusOutcome, CensusVerdict, GroupResult};
use subgraph_core::Limits;

fn subgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subgraph"))
        .args(args)
        .env_remove("SUBGRAPH_MAX_ORDER")
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
fn analyze_c30() {
    let o = subgraph(&["analyze", "C30"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("regular: true, predicted: true"));
    assert!(stdout(&o).contains("degree sequence: [3, 3, 3, 3, 3, 3, 3, 3]"));
}

#[test]
fn analyze_s3_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("out.dot");
    let o = subgraph(&["analyze", "S3", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("regular: false, predicted: false"));
    let text = fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("[label=\"order=").count(), 6);
    assert_eq!(text.matches(" -> ").count(), 8);
    let again = dir.path().join("again.dot");
    subgraph(&["analyze", "S3", "--dot", again.to_str().unwrap()]);
    assert_eq!(fs::read(&dot).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn analyze_over_cap_is_an_error() {
    let o = subgraph(&["analyze", "C300", "--max-order", "200"]);
    assert_eq!(o.status.code(), Some(EXIT_ERROR));
    assert!(stderr(&o).contains("300"));
    let o = Command::new(env!("CARGO_BIN_EXE_subgraph"))
        .args(["analyze", "C12"])
        .env("SUBGRAPH_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_ERROR));
    let o = subgraph(&["analyze", "C2xC2xC2xC2", "--max-subgroups", "20"]);
    assert_eq!(o.status.code(), Some(EXIT_ERROR));
    assert!(stderr(&o).contains("more than 20 subgroups"));
}

#[test]
fn analyze_rejects_bad_specs() {
    let o = subgraph(&["analyze", "Z6"]);
    assert_eq!(o.status.code(), Some(EXIT_ERROR));
    assert!(stderr(&o).contains("position 1"));
}

#[test]
fn analyze_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6.json");
    let o = subgraph(&["analyze", "C6", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = fs::read_to_string(&path).unwrap();
    let doc = AnalysisDocument::from_json(&text).unwrap();
    assert_eq!(doc.schema, 1);
    assert_eq!(doc.order, 6);
    assert_eq!(doc.degree_sequence, vec![2, 2, 2, 2]);
    assert_eq!(doc.to_json().unwrap(), text);
}

#[test]
fn analyze_generator_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.gens");
    fs::write(&path, "# S3 on three points\n3\n(0 1)\n(0 1 2)\n").unwrap();
    let spec = format!("@{}", path.display());
    let o = subgraph(&["analyze", &spec]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("group: user:s3.gens"));
    assert!(stdout(&o).contains("order: 6"));

    let bad = dir.path().join("bad.gens");
    fs::write(&bad, "3\n(0 1\n").unwrap();
    let o = subgraph(&["analyze", &format!("@{}", bad.display())]);
    assert_eq!(o.status.code(), Some(EXIT_ERROR));
    assert!(stderr(&o).contains(":2:"), "{}", stderr(&o));
}

#[test]
fn claims_command() {
    let o = subgraph(&["claims", "C30"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let out = stdout(&o);
    for c in 1..=5 {
        assert!(out.contains(&format!("claim{c}: holds")), "{out}");
    }
    let o = subgraph(&["claims", "S3"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("claim1: not-applicable"));
    let o = subgraph(&["claims", "C3xC3"]);
    assert!(stdout(&o).contains("claim6: holds"));
}

fn census_jsonl(dir: &Path, name: &str, extra: &[&str]) -> (Output, String) {
    let path = dir.join(name);
    let mut args = vec!["census", "--max-order", "30", "--jsonl", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = subgraph(&args);
    (o, fs::read_to_string(&path).unwrap_or_default())
}

#[test]
fn census_with_empty_corpus_matches_default() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    let (o1, a) = census_jsonl(dir.path(), "a.jsonl", &[]);
    let (o2, b) = census_jsonl(dir.path(), "b.jsonl", &["--corpus", empty.to_str().unwrap()]);
    assert_eq!(o1.status.code(), Some(EXIT_OK));
    assert_eq!(o2.status.code(), Some(EXIT_OK));
    assert_eq!(a, b);
    assert_eq!(stdout(&o1), stdout(&o2));
}

#[test]
fn census_jsonl_has_one_line_per_group() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("extra.txt");
    fs::write(&corpus, "# extras\nS4\n\nC2xC2xC2xC2xC2\n").unwrap();
    let (o, text) = census_jsonl(dir.path(), "c.jsonl", &["--corpus", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", stderr(&o));
    let records: Vec<CensusRecord> = text.lines().map(|l| CensusRecord::from_line(l).unwrap()).collect();
    let summary = stdout(&o);
    let analyzed: usize = summary
        .lines()
        .last()
        .unwrap()
        .strip_prefix("analyzed ")
        .unwrap()
        .split(' ')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    // S4 (order 24) is analyzed, (C2)^5 (order 32) is over the cap and recorded as skipped
    assert_eq!(records.len(), analyzed + 1);
    assert!(text.lines().last().unwrap().contains("\"status\":\"skipped\""));
    assert!(records.iter().any(|r| r.label == "S4"));
}

#[test]
fn census_corpus_errors() {
    let o = subgraph(&["census", "--max-order", "12", "--corpus", "/no/such/corpus"]);
    assert_eq!(o.status.code(), Some(EXIT_ERROR));
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("bad.txt");
    fs::write(&corpus, "C6\nZ6\n").unwrap();
    let o = subgraph(&["census", "--max-order", "12", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_ERROR));
    assert!(stdout(&o).contains("Z6"));
}

fn fake_result(observed: bool, predicted: bool) -> GroupResult {
    GroupResult {
        n_subgroups: 3,
        degree_sequence: vec![1, 1, 2],
        observed,
        predicted,
        alpha_identity: true,
        degree_t: None,
        claims: Default::default(),
    }
}

#[test]
fn exit_codes_for_each_census_path() {
    let entry = |label: &str, outcome| CensusEntry {
        label: label.into(),
        order: Some(4),
        outcome,
    };
    let ok = CensusVerdict::from_entries("t", vec![entry("C4", CensusOutcome::Analyzed(fake_result(false, false)))], vec![]);
    assert_eq!(census_exit_code(&ok), EXIT_OK);
    let err = CensusVerdict::from_entries("t", vec![entry("X", CensusOutcome::Error("boom".into()))], vec![]);
    assert_eq!(census_exit_code(&err), EXIT_ERROR);
    let skipped = CensusVerdict::from_entries("t", vec![entry("C999", CensusOutcome::Skipped("cap".into()))], vec![]);
    assert_eq!(census_exit_code(&skipped), EXIT_OK);

    // A forced mismatch: exit 2 and a DOT + JSON dump of the offending group.
    let bad = CensusVerdict::from_entries("t", vec![entry("C4", CensusOutcome::Analyzed(fake_result(true, false)))], vec![]);
    assert_eq!(bad.mismatches, vec!["C4".to_string()]);
    assert_eq!(census_exit_code(&bad), EXIT_MISMATCH);
    let dir = tempfile::tempdir().unwrap();
    let written = dump_mismatches(&bad, &Limits::default(), dir.path()).unwrap();
    assert_eq!(written.len(), 2);
    assert!(fs::read_to_string(dir.path().join("C4.dot")).unwrap().contains("v0 -> v1;"));
    let doc = AnalysisDocument::read_json(&dir.path().join("C4.json")).unwrap();
    assert_eq!(doc.order, 4);

    let mut failing = fake_result(false, false);
    failing.alpha_identity = false;
    let v = CensusVerdict::from_entries("t", vec![entry("C4", CensusOutcome::Analyzed(failing))], vec![]);
    assert_eq!(census_exit_code(&v), EXIT_MISMATCH);
}

#[test]
fn census_output_is_deterministic() {
    let a = subgraph(&["census", "--max-order", "24", "--jobs", "1"]);
    let b = subgraph(&["census", "--max-order", "24", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
}
