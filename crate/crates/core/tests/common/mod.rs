#![allow(dead_code)]

pub mod oracle;

use udrs_core::corpus::{parse_corpus, CorpusCase, BUILTIN_CORPUS};
use udrs_core::resolver::expand_plurals;
use udrs_core::{Interpretation, Interpreter, Knowledge, Lexicon, Payload, Udrs};

pub struct Case {
    pub case: CorpusCase,
    pub interpretation: Interpretation,
}

pub fn corpus() -> Vec<Case> {
    let lex = Lexicon::builtin();
    let base = Knowledge::from_lexicon(&lex);
    parse_corpus(BUILTIN_CORPUS)
        .unwrap()
        .into_iter()
        .map(|case| {
            let k = case.knowledge(&base).unwrap();
            let interpretation = Interpreter::new(&lex, &k).interpret_first(&case.text).unwrap();
            Case { case, interpretation }
        })
        .collect()
}

/// Every fully disambiguated UDRS the corpus gives rise to.
pub fn resolved_udrss(cases: &[Case]) -> Vec<(String, Udrs)> {
    let mut out = Vec::new();
    for c in cases {
        for u in expand_plurals(c.interpretation.udrs()).unwrap() {
            out.push((c.case.text.clone(), u));
        }
    }
    out
}

pub fn scope_bearers(u: &Udrs) -> usize {
    u.conds
        .iter()
        .filter(|c| matches!(c.payload, Payload::Quantifier { .. }))
        .count()
}
