use std::path::PathBuf;
use std::process::Command;

use udrs_core::serial::{from_value, serialize};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("udrs").chain(args.iter().copied());
    let code = udrs_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn data(name: &str) -> PathBuf {
    udrs_core::corpus::data_dir().join(name)
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("udrs-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn json_is_the_golden_fixture_and_round_trips() {
    let (code, out, _) = run(&["parse", "The lawyers hired a secretary.", "--json"]);
    assert_eq!(code, 0);
    let golden = std::fs::read_to_string(data("golden/plural.json")).unwrap();
    assert_eq!(out, golden);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(serialize(&from_value(&v).unwrap()), out);
}

#[test]
fn collective_directive_gives_one_reading() {
    let (code, out, _) = run(&[
        "parse",
        "The lawyers hired a secretary.",
        "--disambiguate",
        "np1=collective",
        "--readings",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("1 reading\n"));
    assert!(out.contains("hire(X1, x2)"));
}

#[test]
fn quantified_sentence_gives_two_readings() {
    let (code, out, _) = run(&["parse", "Every lawyer hired a secretary.", "--readings"]);
    assert_eq!(code, 0);
    assert!(out.contains("2 readings\n"));
    assert_eq!(out.matches("-every->").count(), 2);

    let (_, out, _) = run(&["parse", "Every lawyer hired a secretary.", "--readings", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["readings"].as_array().unwrap().len(), 2);
    assert!(from_value(&v["udrs"]).is_ok());
}

#[test]
fn pending_plural_needs_disambiguation_or_expansion() {
    let (code, _, err) = run(&["parse", "The lawyers hired a secretary.", "--readings"]);
    assert_eq!(code, 1);
    assert!(err.contains("disambiguate"));
    let (code, out, _) = run(&["parse", "The lawyers hired a secretary.", "--readings", "--expand-plurals"]);
    assert_eq!(code, 0);
    assert!(out.contains("3 readings\n"));
}

#[test]
fn dot_output_shape() {
    let (code, out, _) = run(&["parse", "Every lawyer hired a secretary.", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph udrs {"));
    assert!(out.trim_end().ends_with('}'));
    assert_eq!(out.lines().filter(|l| l.contains("dashed")).count(), 1);
}

#[test]
fn traces() {
    let (code, out, _) = run(&["parse", "The lawyers gathered.", "--trace-syntax", "--trace-semantics"]);
    assert_eq!(code, 0);
    assert!(out.contains("gathered"));
    assert!(out.contains("pl_dis"));
}

#[test]
fn usage_and_semantic_errors() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["parse"]).0, 2);
    assert_eq!(run(&["parse", "John left.", "--bogus"]).0, 2);
    assert_eq!(run(&["parse", "John left.", "--disambiguate", "np1=sideways"]).0, 2);
    let (code, _, err) = run(&["parse", "John admired unicorns."]);
    assert_eq!(code, 1);
    assert!(err.contains("unicorns"));
    assert_eq!(run(&["parse", "Left John."]).0, 1);
    assert_eq!(run(&["corpus", "/nonexistent/corpus.txt"]).0, 1);
}

#[test]
fn corpus_mode() {
    let path = data("corpus.txt");
    let (code, out, _) = run(&["--corpus", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains(" 0 failed"));
    let (code, _, _) = run(&["corpus", path.to_str().unwrap()]);
    assert_eq!(code, 0);

    let bad = temp("bad.txt", "text: Every lawyer hired a secretary.\nreadings: 5\n");
    let (code, out, _) = run(&["--corpus", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
}

#[test]
fn custom_lexicon_and_rules() {
    let lex = temp("lex.txt", "the det def pl\nsenators n senators pl\nvoted iv vote\n");
    let rules = temp("rules.txt", "verb vote subject distributive\n");
    let (code, out, err) = run(&[
        "--lexicon",
        lex.to_str().unwrap(),
        "--rules",
        rules.to_str().unwrap(),
        "parse",
        "The senators voted.",
        "--readings",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("1 reading\n"));
    assert!(out.contains("-dist->"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_udrs");
    let ok = Command::new(bin).args(["parse", "John left."]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let usage = Command::new(bin).arg("--frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let semantic = Command::new(bin).args(["parse", "John left every."]).output().unwrap();
    assert_eq!(semantic.status.code(), Some(1));
}
