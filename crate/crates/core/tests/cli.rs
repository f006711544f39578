//! The command-line front end, driven in-process.

use std::path::Path;

use trackcert::cli::run_from;

fn run(args: &[&str]) -> i32 {
    run_from(std::iter::once("trackcert").chain(args.iter().copied()))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_exit_codes() {
    assert_eq!(run(&["classify", "--surface", "S_1_1", "--word", "aB"]), 0);
    assert_eq!(run(&["classify", "--surface", "S_1_1", "--word", "ab"]), 0);
    assert_eq!(run(&["classify", "--surface", "S_1_1", "--word", "a", "--budget", "100"]), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["classify", "--surface", "S_9_9", "--word", "a"]), 64);
    assert_eq!(run(&["classify", "--surface", "S_1_1", "--word", "aZ"]), 64);
    assert_eq!(run(&["classify", "--surface", "S_1_1"]), 64);
    assert_eq!(run(&["frobnicate"]), 64);
    assert_eq!(run(&["classify", "--surface", "S_1_1", "--word", "aB", "--mode", "fast"]), 64);
    assert_eq!(run(&["certify", "--surface", "S_1_1", "--word", "aB", "--K", "zero"]), 64);
}

#[test]
fn certify_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("aB.json");
    let report = dir.path().join("report.json");
    assert_eq!(run(&["certify", "--surface", "S_1_1", "--word", "aB", "--cert", s(&cert), "--out", s(&report)]), 0);
    let js: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(js["report"]["accepted"], true);
    assert_eq!(run(&["verify", "--surface", "S_1_1", "--word", "aB", "--cert", s(&cert)]), 0);
    assert_eq!(
        run(&["verify", "--surface", "S_1_1", "--word", "aB", "--cert", s(&cert), "--tamper", "20", "--seed", "7"]),
        0
    );
    // the certificate says nothing about another class
    assert_eq!(run(&["verify", "--surface", "S_1_1", "--word", "aaB", "--cert", s(&cert)]), 1);
    // a directory of certificates, one of them broken
    std::fs::write(dir.path().join("junk.json"), "{").unwrap();
    std::fs::remove_file(&report).unwrap();
    assert_eq!(run(&["verify", "--surface", "S_1_1", "--word", "aB", "--cert", s(dir.path())]), 64);
}

#[test]
fn reducible_class_cannot_be_certified() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("a.json");
    assert_eq!(run(&["certify", "--surface", "S_1_1", "--word", "a", "--budget", "100", "--cert", s(&cert)]), 2);
    assert!(!cert.exists());
}

#[test]
fn split_seq_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("seq.csv");
    assert_eq!(run(&["split-seq", "--surface", "S_0_5", "--word", "aBc", "--out", s(&out)]), 0);
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("step,max_measure,total_measure,filling\n"));
    assert!(csv.contains("\nm,5\n"));
    assert!(csv.contains("\ncoverage,9/9\n"));
}

#[test]
fn conjugate_decisions() {
    assert_eq!(run(&["conjugate", "--surface", "S_1_1", "--word1", "aB", "--word2", "Ba"]), 0);
    assert_eq!(run(&["conjugate", "--surface", "S_1_1", "--word1", "aB", "--word2", "aaB"]), 1);
}

#[test]
fn path_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let word = dir.path().join("w.json");
    std::fs::write(&word, r#"{"surface": "S_1_1", "word": "aaB"}"#).unwrap();
    assert_eq!(run(&["classify", "--path", s(&word)]), 0);
    assert_eq!(run(&["classify", "--surface", "S_0_5", "--path", s(&word)]), 64);
}
