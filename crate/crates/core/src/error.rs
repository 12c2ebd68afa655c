use thiserror::Error;

use crate::udrs::{Label, PendingKey};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strict subordination cycle through label {0}")]
    Cycle(Label),

    #[error("unknown word `{word}` at token {position}")]
    UnknownWord { word: String, position: usize },

    #[error("no parse: dead token at position {position}")]
    ParseFailure { position: usize },

    #[error("subcategorization mismatch: {0}")]
    SubcatMismatch(String),

    #[error("malformed NP argument: {0}")]
    MalformedNp(String),

    #[error("delayed argument {key} already resolved to a different referent")]
    ConflictingResolution { key: PendingKey },

    #[error("no delayed argument registered for {key}")]
    UnknownKey { key: PendingKey },

    #[error("target {key} is not an underspecified plural NP")]
    NotPlural { key: PendingKey },

    #[error("plural NP {key} is already disambiguated")]
    AlreadyDisambiguated { key: PendingKey },

    #[error("argument slot still delayed for NP {key}; disambiguate it first")]
    UnresolvedSlot { key: PendingKey },

    #[error("inconsistent subordination constraints: {0}")]
    InconsistentConstraints(String),

    #[error("malformed UDRS document: {0}")]
    Document(String),

    #[error("{kind} line {line}: {message}")]
    Format {
        kind: &'static str,
        line: usize,
        message: String,
    },
}
