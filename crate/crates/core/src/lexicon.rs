//! Lexical entries and the vocabulary table.
//!
//! Every instantiation draws fresh labels and referents, so two uses of the
//! same word never share structure. Determiners fix the relation between
//! their distinguished labels: strict for `every`, identity for `a`, and
//! only weak for plural `the`.

use std::collections::HashMap;
use std::fmt;

use crate::disambiguation::Reading;
use crate::error::{Error, Result};
use crate::udrs::{
    fresh_label, fresh_referent, fresh_slot, ArgSlot, Condition, Label, Ls, QuantRel, Referent,
    SlotId, SlotState, Sort, SubordConstraint, Udrs,
};

pub const BUILTIN_LEXICON: &str = include_str!("../data/lexicon.txt");

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Number {
    Sg,
    Pl,
}

/// Syntactic categories of the fragment grammar.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Cat {
    Det(Number),
    Noun(Number),
    Np,
    /// Transitive verb, still missing its object.
    Tv,
    /// Verb taking a finite clause complement.
    Cv,
    Vp,
    S,
    Comp,
    Cp,
    Discourse,
}

impl fmt::Display for Cat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Cat::Det(_) => "Det",
            Cat::Noun(_) => "N",
            Cat::Np => "NP",
            Cat::Tv => "TV",
            Cat::Cv => "CV",
            Cat::Vp => "VP",
            Cat::S => "S",
            Cat::Comp => "C",
            Cat::Cp => "CP",
            Cat::Discourse => "D",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HeadType {
    Verb,
    Quant,
    Plural,
    Indef,
    Noun,
    Name,
    Comp,
    Coord,
}

impl HeadType {
    /// Heads whose NP triggers the conditional scope ceiling.
    pub fn is_potentially_scope_bearing(self) -> bool {
        matches!(self, HeadType::Quant | HeadType::Plural)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Case {
    Nom,
    Acc,
}

/// Label and referent a noun contributes, or a determiner expects.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct NominalIndex {
    pub label: Label,
    pub dref: Referent,
    pub number: Number,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SubcatSlot {
    Nominal(NominalIndex),
    Np { case: Case, slot: SlotId },
    /// Finite clause headed by an overt complementizer.
    Clause,
    /// What a complementizer selects: a saturated sentence.
    Sentence,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sign {
    pub cat: Cat,
    pub head_type: HeadType,
    /// Unsaturated arguments in order; the nominative slot, if any, first.
    pub subcat: Vec<SubcatSlot>,
    pub udrs: Udrs,
    /// Set on nouns.
    pub index: Option<NominalIndex>,
    /// Scope ceiling a complementizer designates for its clause.
    pub ceiling: Option<Label>,
    /// Lexically forced reading of a plural subject (e.g. `gathered`).
    pub subject_reading: Option<Reading>,
}

impl Sign {
    pub fn new(cat: Cat, head_type: HeadType, udrs: Udrs) -> Self {
        Sign {
            cat,
            head_type,
            subcat: Vec::new(),
            udrs,
            index: None,
            ceiling: None,
            subject_reading: None,
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.subcat.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Pos {
    Det,
    Noun,
    Name,
    Pron,
    Tv,
    Iv,
    Cv,
    Comp,
}

impl Pos {
    fn parse(s: &str) -> Option<Pos> {
        Some(match s {
            "det" => Pos::Det,
            "n" => Pos::Noun,
            "name" => Pos::Name,
            "pron" => Pos::Pron,
            "tv" => Pos::Tv,
            "iv" => Pos::Iv,
            "cv" => Pos::Cv,
            "comp" => Pos::Comp,
            _ => return None,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LexEntry {
    pub word: String,
    pub pos: Pos,
    pub rel: String,
    pub plural: bool,
    pub collective_only: bool,
}

impl LexEntry {
    pub fn number(&self) -> Number {
        if self.plural {
            Number::Pl
        } else {
            Number::Sg
        }
    }

    /// The category the entry occupies in the chart.
    pub fn cat(&self) -> Cat {
        match self.pos {
            Pos::Det => Cat::Det(self.number()),
            Pos::Noun => Cat::Noun(self.number()),
            Pos::Name | Pos::Pron => Cat::Np,
            Pos::Tv => Cat::Tv,
            Pos::Iv => Cat::Vp,
            Pos::Cv => Cat::Cv,
            Pos::Comp => Cat::Comp,
        }
    }

    /// A fresh sign for this entry.
    pub fn instantiate(&self) -> Sign {
        match self.pos {
            Pos::Det => match self.rel.as_str() {
                "every" => entry_quant_det(),
                "indef" => entry_indef_det(),
                _ => entry_plural_det(),
            },
            Pos::Noun => entry_noun(&self.rel, self.number()),
            Pos::Name => entry_name(&self.rel),
            Pos::Pron => entry_pronoun(),
            Pos::Tv => entry_transitive_verb(&self.rel),
            Pos::Iv => {
                let reading = self.collective_only.then_some(Reading::Collective);
                entry_intransitive_verb(&self.rel, reading)
            }
            Pos::Cv => entry_clausal_verb(&self.rel),
            Pos::Comp => entry_complementizer(),
        }
    }
}

/// Word table loaded from the plain-text lexicon format.
#[derive(Clone, Debug, Default)]
pub struct Lexicon {
    entries: HashMap<String, Vec<LexEntry>>,
}

impl Lexicon {
    pub fn builtin() -> Lexicon {
        Lexicon::parse(BUILTIN_LEXICON).expect("built-in lexicon is well formed")
    }

    /// Parses `word POS rel [flags]` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Lexicon> {
        let mut lex = Lexicon::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Format {
                kind: "lexicon",
                line: n + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [word, pos, rel, flags @ ..] = fields.as_slice() else {
                return Err(err("expected `word POS rel [flags]`".into()));
            };
            let pos = Pos::parse(pos).ok_or_else(|| err(format!("unknown POS `{pos}`")))?;
            let mut entry = LexEntry {
                word: word.to_lowercase(),
                pos,
                rel: rel.to_string(),
                plural: false,
                collective_only: false,
            };
            for flag in flags {
                match *flag {
                    "pl" => entry.plural = true,
                    "collective-only" => entry.collective_only = true,
                    other => return Err(err(format!("unknown flag `{other}`"))),
                }
            }
            if pos == Pos::Det {
                match (entry.rel.as_str(), entry.plural) {
                    ("every", false) | ("indef", false) | ("def", true) => {}
                    _ => {
                        return Err(err(format!(
                            "determiner rel must be `every`, `indef` or plural `def`, got `{}`",
                            entry.rel
                        )))
                    }
                }
            }
            if entry.collective_only && pos != Pos::Iv && pos != Pos::Tv {
                return Err(err("collective-only applies to verbs".into()));
            }
            lex.entries.entry(entry.word.clone()).or_default().push(entry);
        }
        Ok(lex)
    }

    pub fn lookup(&self, word: &str) -> Option<&[LexEntry]> {
        self.entries.get(word).map(Vec::as_slice)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    /// A fresh sign for the first entry of `word`.
    pub fn sign(&self, word: &str) -> Result<Sign> {
        self.lookup(word)
            .and_then(|e| e.first())
            .map(LexEntry::instantiate)
            .ok_or_else(|| Error::UnknownWord {
                word: word.to_string(),
                position: 0,
            })
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

fn verb(rel: &str, cat: Cat, arity: usize, clause: bool) -> Sign {
    let l = fresh_label();
    let ceiling = fresh_label();
    let mut udrs = Udrs::new(Ls::new(ceiling, l));
    let slots: Vec<SlotId> = (0..arity).map(|_| fresh_slot()).collect();
    for s in &slots {
        udrs.slots.insert(*s, SlotState::Open);
    }
    udrs.add_condition(Condition::predicate(
        l,
        rel,
        slots.iter().map(|s| ArgSlot::Verb(*s)).collect(),
    ));
    let mut sign = Sign::new(cat, HeadType::Verb, udrs);
    sign.subcat = slots
        .iter()
        .enumerate()
        .map(|(i, &slot)| SubcatSlot::Np {
            case: if i == 0 { Case::Nom } else { Case::Acc },
            slot,
        })
        .collect();
    if clause {
        sign.subcat.push(SubcatSlot::Clause);
    }
    sign
}

/// `hired`, `met`, ...: one predicate at the verb label with two delayed
/// argument slots; L-MAX is a placeholder the clause's complementizer binds.
pub fn entry_transitive_verb(rel: &str) -> Sign {
    verb(rel, Cat::Tv, 2, false)
}

pub fn entry_intransitive_verb(rel: &str, subject_reading: Option<Reading>) -> Sign {
    let mut sign = verb(rel, Cat::Vp, 1, false);
    sign.subject_reading = subject_reading;
    sign
}

/// `believed`: a subject slot plus a finite clause complement.
pub fn entry_clausal_verb(rel: &str) -> Sign {
    verb(rel, Cat::Cv, 1, true)
}

/// `every`: duplex at l1 with restrictor l11 and scope l12, both strictly
/// below l1; the restrictor introduces the bound individual.
pub fn entry_quant_det() -> Sign {
    let (l1, l11, l12) = (fresh_label(), fresh_label(), fresh_label());
    let x = fresh_referent(Sort::Individual);
    let mut udrs = Udrs::new(Ls::new(l1, l12));
    udrs.add_constraint(SubordConstraint::strict(l1, l11));
    udrs.add_constraint(SubordConstraint::strict(l1, l12));
    udrs.add_condition(Condition::quantifier(l1, QuantRel::Every, l11, l12));
    udrs.add_condition(Condition::referent(l11, x));
    let mut sign = Sign::new(Cat::Det(Number::Sg), HeadType::Quant, udrs);
    sign.subcat = vec![SubcatSlot::Nominal(NominalIndex {
        label: l11,
        dref: x,
        number: Number::Sg,
    })];
    sign
}

/// `a`: one individual referent, L-MAX identified with L-MIN. The noun is
/// coindexed with L-MAX (the two labels are identical anyway).
pub fn entry_indef_det() -> Sign {
    let (l1, l12) = (fresh_label(), fresh_label());
    let x = fresh_referent(Sort::Individual);
    let mut udrs = Udrs::new(Ls::new(l1, l12));
    udrs.add_constraint(SubordConstraint::identity(l1, l12));
    udrs.add_condition(Condition::referent(l1, x));
    let mut sign = Sign::new(Cat::Det(Number::Sg), HeadType::Indef, udrs);
    sign.subcat = vec![SubcatSlot::Nominal(NominalIndex {
        label: l1,
        dref: x,
        number: Number::Sg,
    })];
    sign
}

/// Plural `the`: a group referent, with L-MIN only weakly below L-MAX.
pub fn entry_plural_det() -> Sign {
    let (l1, l12) = (fresh_label(), fresh_label());
    let x = fresh_referent(Sort::Group);
    let mut udrs = Udrs::new(Ls::new(l1, l12));
    udrs.add_constraint(SubordConstraint::weak(l1, l12));
    udrs.add_condition(Condition::referent(l1, x));
    let mut sign = Sign::new(Cat::Det(Number::Pl), HeadType::Plural, udrs);
    sign.subcat = vec![SubcatSlot::Nominal(NominalIndex {
        label: l1,
        dref: x,
        number: Number::Pl,
    })];
    sign
}

fn complementizer(ceiling: Label) -> Sign {
    let mut sign = Sign::new(Cat::Comp, HeadType::Comp, Udrs::new(Ls::new(ceiling, ceiling)));
    sign.subcat = vec![SubcatSlot::Sentence];
    sign.ceiling = Some(ceiling);
    sign
}

/// Overt `that`: designates a fresh ceiling label for its clause.
pub fn entry_complementizer() -> Sign {
    complementizer(fresh_label())
}

/// The silent complementizer of a root clause; its ceiling is the top label.
pub fn root_complementizer() -> Sign {
    complementizer(Label::TOP)
}

/// A noun with its own fresh label and referent; a determiner coindexes them.
pub fn entry_noun(rel: &str, number: Number) -> Sign {
    let sort = match number {
        Number::Sg => Sort::Individual,
        Number::Pl => Sort::Group,
    };
    entry_noun_at(rel, number, fresh_label(), fresh_referent(sort))
}

pub fn entry_noun_at(rel: &str, number: Number, label: Label, dref: Referent) -> Sign {
    let mut udrs = Udrs::new(Ls::new(label, label));
    udrs.add_condition(Condition::predicate(label, rel, vec![ArgSlot::Direct(dref)]));
    let mut sign = Sign::new(Cat::Noun(number), HeadType::Noun, udrs);
    sign.index = Some(NominalIndex {
        label,
        dref,
        number,
    });
    sign
}

/// Proper names pattern with singular indefinites: identical L-MAX and
/// L-MIN, a referent and a naming predicate.
pub fn entry_name(rel: &str) -> Sign {
    let (l1, l12) = (fresh_label(), fresh_label());
    let x = fresh_referent(Sort::Individual);
    let mut udrs = Udrs::new(Ls::new(l1, l12));
    udrs.add_constraint(SubordConstraint::identity(l1, l12));
    udrs.add_condition(Condition::referent(l1, x));
    udrs.add_condition(Condition::predicate(l1, rel, vec![ArgSlot::Direct(x)]));
    Sign::new(Cat::Np, HeadType::Name, udrs)
}

/// `they`: a group referent that is not scope bearing. No antecedent is
/// looked up.
pub fn entry_pronoun() -> Sign {
    let (l1, l12) = (fresh_label(), fresh_label());
    let x = fresh_referent(Sort::Group);
    let mut udrs = Udrs::new(Ls::new(l1, l12));
    udrs.add_constraint(SubordConstraint::identity(l1, l12));
    udrs.add_condition(Condition::referent(l1, x));
    Sign::new(Cat::Np, HeadType::Indef, udrs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::closure;
    use crate::udrs::{ConstraintKind, Payload};

    fn classify(sign: &Sign) -> &'static str {
        let cl = closure(&sign.udrs.subord).unwrap();
        let (max, min) = (sign.udrs.ls.max, sign.udrs.ls.min);
        if cl.eq(max, min) {
            "identity"
        } else if cl.gt(max, min) {
            "strict"
        } else if cl.ge(max, min) {
            "weak"
        } else {
            "none"
        }
    }

    #[test]
    fn transitive_verb_shape() {
        let s = entry_transitive_verb("hire");
        assert_eq!(s.udrs.conds.len(), 1);
        let c = &s.udrs.conds[0];
        assert_eq!(c.label, s.udrs.ls.min);
        match &c.payload {
            Payload::Predicate { rel, args } => {
                assert_eq!(rel, "hire");
                assert_eq!(args.len(), 2);
                for a in args {
                    assert!(matches!(a, ArgSlot::Verb(_)));
                }
            }
            _ => panic!("expected predicate"),
        }
        assert!(s.udrs.subord.is_empty());
        assert!(matches!(
            s.subcat[..],
            [SubcatSlot::Np { case: Case::Nom, .. }, SubcatSlot::Np { case: Case::Acc, .. }]
        ));
    }

    #[test]
    fn two_instances_are_label_disjoint() {
        let a = entry_transitive_verb("hire");
        let b = entry_transitive_verb("hire");
        let la = a.udrs.labels();
        assert!(b.udrs.labels().iter().all(|l| !la.contains(l)));
    }

    #[test]
    fn gathered_carries_collective_directive() {
        let lex = Lexicon::builtin();
        let s = lex.sign("gathered").unwrap();
        assert_eq!(s.subject_reading, Some(Reading::Collective));
        assert_eq!(s.udrs.conds.len(), 1);
        assert_eq!(lex.sign("left").unwrap().subject_reading, None);
    }

    #[test]
    fn every_entry() {
        let s = entry_quant_det();
        assert_eq!(s.head_type, HeadType::Quant);
        assert_eq!(classify(&s), "strict");
        assert_eq!(s.udrs.subord.len(), 2);
        assert!(s.udrs.subord.iter().all(|c| c.kind == ConstraintKind::Strict));
        let (rel, res, scope) = s.udrs.quantifier_at(s.udrs.ls.max).unwrap();
        assert_eq!(rel, QuantRel::Every);
        assert_eq!(scope, s.udrs.ls.min);
        assert!(s.udrs.referent_at(res).is_some());
        let SubcatSlot::Nominal(idx) = s.subcat[0] else { panic!() };
        assert_eq!(idx.label, res);
    }

    #[test]
    fn indefinite_entry() {
        let s = entry_indef_det();
        assert_eq!(s.head_type, HeadType::Indef);
        assert_eq!(classify(&s), "identity");
        assert_eq!(s.udrs.conds.len(), 1);
        assert!(s.udrs.referent_at(s.udrs.ls.max).is_some());
    }

    #[test]
    fn plural_entry() {
        let s = entry_plural_det();
        assert_eq!(s.head_type, HeadType::Plural);
        assert_eq!(classify(&s), "weak");
        let x = s.udrs.referent_at(s.udrs.ls.max).unwrap();
        assert!(x.is_group());
    }

    #[test]
    fn head_type_matches_label_relation() {
        let lex = Lexicon::builtin();
        for word in ["every", "a", "the", "john", "they"] {
            let s = lex.sign(word).unwrap();
            let expected = match s.head_type {
                HeadType::Quant => "strict",
                HeadType::Indef | HeadType::Name => "identity",
                HeadType::Plural => "weak",
                other => panic!("unexpected {other:?}"),
            };
            assert_eq!(classify(&s), expected, "{word}");
        }
    }

    #[test]
    fn no_entry_has_conditionals() {
        let lex = Lexicon::builtin();
        let words: Vec<String> = lex.words().map(str::to_string).collect();
        for w in words {
            let s = lex.sign(&w).unwrap();
            assert!(s.udrs.subord.iter().all(|c| !c.is_conditional()), "{w}");
        }
    }

    #[test]
    fn complementizers_contribute_no_conditions() {
        let root = root_complementizer();
        assert_eq!(root.ceiling, Some(Label::TOP));
        assert!(root.udrs.conds.is_empty());
        let that = entry_complementizer();
        assert!(that.udrs.conds.is_empty());
        assert!(!that.ceiling.unwrap().is_top());
        assert_ne!(that.ceiling, entry_complementizer().ceiling);
    }

    #[test]
    fn names_and_nouns() {
        let john = entry_name("John");
        assert_eq!(john.head_type, HeadType::Name);
        assert_eq!(john.udrs.conds.len(), 2);
        let lex = Lexicon::builtin();
        let sg = lex.sign("lawyer").unwrap();
        let pl = lex.sign("lawyers").unwrap();
        assert_eq!(sg.udrs.conds.len(), 1);
        assert_eq!(sg.cat, Cat::Noun(Number::Sg));
        assert_eq!(pl.cat, Cat::Noun(Number::Pl));
        assert_eq!(sg.head_type, pl.head_type);
    }

    #[test]
    fn unknown_word() {
        let lex = Lexicon::builtin();
        assert!(matches!(lex.sign("dog"), Err(Error::UnknownWord { .. })));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = Lexicon::parse("every det every\nfoo bogus x\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
        assert!(Lexicon::parse("the det def\n").is_err());
        assert!(Lexicon::parse("x n y wobbly\n").is_err());
    }
}
