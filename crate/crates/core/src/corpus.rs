//! Golden regression corpus.
//!
//! A corpus file holds blank-line separated cases:
//!
//! ```text
//! # comment
//! text: The lawyers hired a secretary.
//! disambiguate: np1=collective
//! rule: continuation share collective
//! readings: 1
//! expanded: 1
//! golden: golden/collective.json
//! ```
//!
//! Only `text:` is required. `readings` is a count or `unresolved` (the
//! UDRS still has a delayed argument); `expanded` counts readings with
//! pending plurals branched both ways; `golden` names a canonical JSON file
//! relative to the corpus file.

use std::path::{Path, PathBuf};

use crate::disambiguation::Knowledge;
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::principles::{Interpretation, Interpreter};
use crate::resolver::{count_readings, enumerate_with, EnumOptions};
use crate::serial::serialize;

pub const BUILTIN_CORPUS: &str = include_str!("../data/corpus.txt");

/// Directory holding the built-in corpus and its golden files.
pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Expect {
    Count(usize),
    Unresolved,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CorpusCase {
    pub line: usize,
    pub text: String,
    pub disambiguate: Vec<String>,
    pub rules: Vec<String>,
    pub readings: Option<Expect>,
    pub expanded: Option<usize>,
    pub golden: Option<String>,
}

impl CorpusCase {
    /// The knowledge for this case: `base` plus its rules and directives.
    pub fn knowledge(&self, base: &Knowledge) -> Result<Knowledge> {
        let mut k = base.clone();
        for r in &self.rules {
            k.add_rule_line(r).map_err(|message| self.err(message))?;
        }
        for d in &self.disambiguate {
            let (target, reading) = Knowledge::parse_override(d).map_err(|message| self.err(message))?;
            k.add_override(target, reading);
        }
        Ok(k)
    }

    fn err(&self, message: String) -> Error {
        Error::Format {
            kind: "corpus",
            line: self.line,
            message,
        }
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusCase>> {
    let mut cases = Vec::new();
    let mut current: Option<CorpusCase> = None;
    let finish = |c: Option<CorpusCase>, cases: &mut Vec<CorpusCase>| -> Result<()> {
        if let Some(c) = c {
            if c.text.is_empty() {
                return Err(c.err("case without `text:`".into()));
            }
            cases.push(c);
        }
        Ok(())
    };
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            finish(current.take(), &mut cases)?;
            continue;
        }
        let err = |message: String| Error::Format {
            kind: "corpus",
            line: n + 1,
            message,
        };
        let case = current.get_or_insert_with(|| CorpusCase {
            line: n + 1,
            ..CorpusCase::default()
        });
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `key: value`, got `{line}`")))?;
        let value = value.trim().to_string();
        match key.trim() {
            "text" => {
                if !case.text.is_empty() {
                    case.text.push(' ');
                }
                case.text.push_str(&value);
            }
            "disambiguate" => case.disambiguate.push(value),
            "rule" => case.rules.push(value),
            "readings" => {
                case.readings = Some(if value == "unresolved" {
                    Expect::Unresolved
                } else {
                    Expect::Count(value.parse().map_err(|_| err(format!("bad count `{value}`")))?)
                })
            }
            "expanded" => case.expanded = Some(value.parse().map_err(|_| err(format!("bad count `{value}`")))?),
            "golden" => case.golden = Some(value),
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    finish(current, &mut cases)?;
    Ok(cases)
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub case: CorpusCase,
    pub failures: Vec<String>,
    pub interpretation: Option<Interpretation>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Interprets one case and checks each expectation it states.
pub fn run_case(case: &CorpusCase, lexicon: &Lexicon, base: &Knowledge, base_dir: &Path) -> CaseReport {
    let mut report = CaseReport {
        case: case.clone(),
        failures: Vec::new(),
        interpretation: None,
    };
    let knowledge = match case.knowledge(base) {
        Ok(k) => k,
        Err(e) => {
            report.failures.push(e.to_string());
            return report;
        }
    };
    let interp = match Interpreter::new(lexicon, &knowledge).interpret_first(&case.text) {
        Ok(i) => i,
        Err(e) => {
            report.failures.push(format!("interpretation failed: {e}"));
            return report;
        }
    };
    let u = interp.udrs();
    if let Some(golden) = &case.golden {
        match std::fs::read_to_string(base_dir.join(golden)) {
            Ok(expected) if expected == serialize(u) => {}
            Ok(_) => report.failures.push(format!("UDRS differs from {golden}")),
            Err(e) => report.failures.push(format!("cannot read {golden}: {e}")),
        }
    }
    match (case.readings, count_readings(u)) {
        (None, _) => {}
        (Some(Expect::Count(n)), Ok(m)) if n == m => {}
        (Some(Expect::Unresolved), Err(Error::UnresolvedSlot { .. })) => {}
        (Some(expect), got) => report
            .failures
            .push(format!("readings: expected {expect:?}, got {got:?}")),
    }
    if let Some(n) = case.expanded {
        match enumerate_with(u, EnumOptions { expand_plurals: true }) {
            Ok(r) if r.len() == n => {}
            got => report
                .failures
                .push(format!("expanded readings: expected {n}, got {:?}", got.map(|r| r.len()))),
        }
    }
    report.interpretation = Some(interp);
    report
}

pub fn run_corpus(cases: &[CorpusCase], lexicon: &Lexicon, base: &Knowledge, base_dir: &Path) -> Vec<CaseReport> {
    cases.iter().map(|c| run_case(c, lexicon, base, base_dir)).collect()
}
