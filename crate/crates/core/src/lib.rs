//! Underspecified discourse representation structures for a small English
//! fragment: construction from parsed sentences, monotonic plural
//! disambiguation, and enumeration of the fully scoped readings.

pub mod closure;
pub mod corpus;
pub mod delayed;
pub mod disambiguation;
pub mod error;
pub mod lexicon;
pub mod parser;
pub mod principles;
pub mod render;
pub mod resolver;
pub mod serial;
pub mod session;
pub mod udrs;

pub use closure::{check_udrs, closure, closure_over, Closure, Violation};
pub use delayed::{dref_res, resolve_pending, scope_status, ScopeStatus};
pub use disambiguation::{
    pl_dis, pl_dis_collective, pl_dis_distributive, pl_dis_trivial, plural_target, Knowledge, NpInfo,
    OverrideTarget, PluralTarget, Reading, ReadingDecision, Role, Verdict,
};
pub use error::{Error, Result};
pub use lexicon::{Cat, HeadType, Lexicon, Sign};
pub use parser::{parse, parse_text, tokenize, Construction, DerivationNode, Token};
pub use principles::{
    combine_coord, combine_functional, combine_head_comp, combine_head_subj, CombinatorResult,
    DisambiguationStep, Interpretation, Interpreter,
};
pub use render::Naming;
pub use resolver::{
    check_binding, count_readings, enumerate_readings, enumerate_scopings, enumerate_with, Drs, DrsCondition,
    EnumOptions, Scoping,
};
pub use session::Session;
pub use udrs::{
    fresh_label, fresh_referent, merge, ArgSlot, ArgValue, Condition, ConstraintKind, Label, Ls, Payload,
    PendingKey, QuantRel, Referent, SlotState, Sort, SubordConstraint, Udrs,
};
