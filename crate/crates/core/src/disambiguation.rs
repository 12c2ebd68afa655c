//! Monotonic plural disambiguation and the knowledge rules that trigger it.
//!
//! A collective reading strengthens the plural's weak `L-MAX ≥ L-MIN` to an
//! identity; a distributive reading adds a distribution duplex over a fresh
//! individual. Both only add constraints and conditions, and both release
//! the delayed argument slot of the plural NP.

use std::fmt;
use std::str::FromStr;

use crate::closure::closure;
use crate::delayed::{is_pending, resolve_pending};
use crate::error::{Error, Result};
use crate::lexicon::{Lexicon, Pos};
use crate::udrs::{
    fresh_label, fresh_referent, Condition, Payload, PendingKey, QuantRel, Referent, Sort,
    SubordConstraint, Udrs,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Reading {
    Collective,
    Distributive,
}

impl Reading {
    pub fn name(self) -> &'static str {
        match self {
            Reading::Collective => "collective",
            Reading::Distributive => "distributive",
        }
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Reading {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "collective" | "coll" => Ok(Reading::Collective),
            "distributive" | "dist" => Ok(Reading::Distributive),
            other => Err(format!("unknown reading `{other}`")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Collective,
    Distributive,
    Unknown,
}

impl From<Reading> for Verdict {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Collective => Verdict::Collective,
            Reading::Distributive => Verdict::Distributive,
        }
    }
}

impl Verdict {
    pub fn reading(self) -> Option<Reading> {
        match self {
            Verdict::Collective => Some(Reading::Collective),
            Verdict::Distributive => Some(Reading::Distributive),
            Verdict::Unknown => None,
        }
    }
}

/// An underspecified plural NP: its distinguished labels and group referent.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PluralTarget {
    pub key: PendingKey,
    pub group: Referent,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ReadingDecision {
    pub target: PluralTarget,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Role {
    Subject,
    Object,
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "subject" | "subj" => Ok(Role::Subject),
            "object" | "obj" => Ok(Role::Object),
            other => Err(format!("unknown role `{other}`")),
        }
    }
}

/// An argument NP as seen by the knowledge rules. `index` counts argument
/// NPs from 1 in surface order over the whole discourse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NpInfo {
    pub index: usize,
    pub key: PendingKey,
    pub plural: bool,
    pub group: Option<Referent>,
    pub sentence: usize,
    pub role: Role,
    pub verb: String,
}

/// Checks that `key` names a plural NP of `u` that is still undecided.
pub fn plural_target(u: &Udrs, key: PendingKey) -> Result<PluralTarget> {
    let weak = SubordConstraint::weak(key.max, key.min);
    if !u.subord.contains(&weak) {
        return Err(Error::NotPlural { key });
    }
    let group = u
        .referent_at(key.max)
        .filter(|r| r.is_group())
        .ok_or(Error::NotPlural { key })?;
    let cl = closure(&u.subord)?;
    if cl.eq(key.max, key.min) || cl.gt(key.max, key.min) {
        return Err(Error::AlreadyDisambiguated { key });
    }
    Ok(PluralTarget { key, group })
}

fn release(u: &mut Udrs, key: PendingKey, dref: Referent) -> Result<()> {
    if u.slots.values().any(|s| matches!(s, crate::udrs::SlotState::Linked { np, .. } if *np == key)) {
        resolve_pending(u, key, dref)?;
    }
    Ok(())
}

/// Collective reading: adds `L-MAX = L-MIN` and fills the slot with the group.
pub fn pl_dis_collective(u: &Udrs, key: PendingKey) -> Result<Udrs> {
    let target = plural_target(u, key)?;
    let mut out = u.clone();
    out.add_constraint(SubordConstraint::identity(key.max, key.min));
    release(&mut out, key, target.group)?;
    Ok(out)
}

/// Distributive reading: a distribution duplex at L-MAX whose restrictor
/// introduces a fresh member of the group; the slot gets the member.
pub fn pl_dis_distributive(u: &Udrs, key: PendingKey) -> Result<Udrs> {
    let target = plural_target(u, key)?;
    let res = fresh_label();
    let x = fresh_referent(Sort::Individual);
    let mut out = u.clone();
    out.add_condition(Condition::quantifier(key.max, QuantRel::Distribution, res, key.min));
    out.add_condition(Condition::referent(res, x));
    out.add_condition(Condition::membership(res, x, target.group));
    out.add_constraint(SubordConstraint::strict(key.max, res));
    out.add_constraint(SubordConstraint::strict(key.max, key.min));
    release(&mut out, key, x)?;
    Ok(out)
}

pub fn pl_dis_trivial(u: &Udrs) -> Udrs {
    u.clone()
}

pub fn pl_dis(u: &Udrs, key: PendingKey, reading: Reading) -> Result<Udrs> {
    match reading {
        Reading::Collective => pl_dis_collective(u, key),
        Reading::Distributive => pl_dis_distributive(u, key),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OverrideTarget {
    /// The k-th argument NP, counted from 1.
    Np(usize),
    /// The subject of the first sentence.
    Subject,
}

impl FromStr for OverrideTarget {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "subj" || s == "subject" {
            return Ok(OverrideTarget::Subject);
        }
        let digits = s.strip_prefix("np").unwrap_or(s);
        match digits.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(OverrideTarget::Np(k)),
            _ => Err(format!("bad NP reference `{s}`; expected np<k>, <k> or subj")),
        }
    }
}

/// The rule registry consulted whenever a plural might be disambiguated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Knowledge {
    verb_rules: Vec<(String, Role, Reading)>,
    continuation_rules: Vec<(String, Reading)>,
    overrides: Vec<(OverrideTarget, Reading)>,
}

impl Knowledge {
    pub fn new() -> Self {
        Self::default()
    }

    /// Turns collective-only verb flags into subject rules.
    pub fn from_lexicon(lexicon: &Lexicon) -> Self {
        let mut k = Knowledge::new();
        let mut words: Vec<&str> = lexicon.words().collect();
        words.sort_unstable();
        for w in words {
            for e in lexicon.lookup(w).unwrap_or_default() {
                if e.collective_only && matches!(e.pos, Pos::Iv | Pos::Tv) {
                    k.add_verb_rule(&e.rel, Role::Subject, Reading::Collective);
                }
            }
        }
        k
    }

    pub fn add_verb_rule(&mut self, rel: &str, role: Role, reading: Reading) {
        let rule = (rel.to_string(), role, reading);
        if !self.verb_rules.contains(&rule) {
            self.verb_rules.push(rule);
        }
    }

    pub fn add_continuation_rule(&mut self, rel: &str, reading: Reading) {
        let rule = (rel.to_string(), reading);
        if !self.continuation_rules.contains(&rule) {
            self.continuation_rules.push(rule);
        }
    }

    pub fn add_override(&mut self, target: OverrideTarget, reading: Reading) {
        self.overrides.retain(|(t, _)| *t != target);
        self.overrides.push((target, reading));
    }

    /// Parses `np<k>=<reading>`.
    pub fn parse_override(directive: &str) -> std::result::Result<(OverrideTarget, Reading), String> {
        let (target, reading) = directive
            .split_once('=')
            .ok_or_else(|| format!("expected <np>=<reading>, got `{directive}`"))?;
        Ok((target.trim().parse()?, reading.trim().parse()?))
    }

    /// Adds rules from text: `verb <rel> subject|object <reading>` or
    /// `continuation <rel> <reading>`, one per line, `#` comments.
    pub fn add_rules(&mut self, text: &str) -> Result<()> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            self.add_rule_line(line).map_err(|message| Error::Format {
                kind: "rules",
                line: n + 1,
                message,
            })?;
        }
        Ok(())
    }

    pub fn add_rule_line(&mut self, line: &str) -> std::result::Result<(), String> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["verb", rel, role, reading] => {
                self.add_verb_rule(rel, role.parse()?, reading.parse()?);
                Ok(())
            }
            ["continuation", rel, reading] => {
                self.add_continuation_rule(rel, reading.parse()?);
                Ok(())
            }
            _ => Err(format!(
                "expected `verb <rel> subject|object <reading>` or `continuation <rel> <reading>`, got `{line}`"
            )),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.verb_rules.is_empty() && self.continuation_rules.is_empty() && self.overrides.is_empty()
    }

    /// Decides the reading of `np` in `context`. A continuation is the UDRS
    /// of the sentence just attached at a coordination node.
    pub fn decide(&self, context: &Udrs, np: &NpInfo, continuation: Option<&Udrs>) -> Option<ReadingDecision> {
        if !np.plural || !is_pending(context, np.key) {
            return None;
        }
        let target = plural_target(context, np.key).ok()?;
        let verdict = self
            .lookup(np, continuation)
            .map_or(Verdict::Unknown, Verdict::from);
        Some(ReadingDecision { target, verdict })
    }

    fn lookup(&self, np: &NpInfo, continuation: Option<&Udrs>) -> Option<Reading> {
        for (t, r) in &self.overrides {
            let hit = match t {
                OverrideTarget::Np(k) => *k == np.index,
                OverrideTarget::Subject => np.role == Role::Subject && np.sentence == 0,
            };
            if hit {
                return Some(*r);
            }
        }
        for (rel, role, r) in &self.verb_rules {
            if *rel == np.verb && *role == np.role {
                return Some(*r);
            }
        }
        let cont = continuation?;
        for (rel, r) in &self.continuation_rules {
            let mentions = cont
                .conds
                .iter()
                .any(|c| matches!(&c.payload, Payload::Predicate { rel: p, .. } if p == rel));
            if mentions {
                return Some(*r);
            }
        }
        None
    }
}
