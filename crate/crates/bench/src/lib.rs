//! Sample inputs shared by the benchmarks.

use udrs_core::{Interpreter, Knowledge, Lexicon, Udrs};

pub const SENTENCES: &[&str] = &[
    "The lawyers hired a secretary.",
    "Every lawyer hired every secretary.",
    "Every lawyer believed that a clerk left.",
    "The lawyers hired a secretary. They shared an office. Every clerk met the students.",
];

/// Interprets `text` with the built-in lexicon and no extra rules.
pub fn build(text: &str) -> Udrs {
    let lexicon = Lexicon::builtin();
    let knowledge = Knowledge::from_lexicon(&lexicon);
    Interpreter::new(&lexicon, &knowledge)
        .interpret_first(text)
        .expect("sample sentence interprets")
        .sign
        .udrs
}
