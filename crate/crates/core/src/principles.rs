//! The semantics principle as combinators over signs, and the bottom-up
//! interpretation of derivation trees.
//!
//! Every combination takes the union of both daughters' conditions and
//! constraints and projects the head's distinguished labels. Argument
//! combinations add the weak constraint placing the verb below the
//! argument's L-MIN, and a conditional scope ceiling for quantified or
//! plural arguments. Functional heads bind the clause's ceiling label.

use std::collections::HashMap;

use crate::closure::closure_over;
use crate::delayed::{dref_res, is_pending};
use crate::disambiguation::{pl_dis, Knowledge, NpInfo, ReadingDecision, Role};
use crate::error::{Error, Result};
use crate::lexicon::{entry_noun_at, root_complementizer, Case, Cat, HeadType, Lexicon, Sign, SubcatSlot};
use crate::parser::{parse_text, Construction, DerivationNode};
use crate::udrs::{Label, Ls, Payload, SlotId, SlotState, SubordConstraint, Udrs};

/// One application of plural disambiguation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DisambiguationStep {
    pub decision: ReadingDecision,
    pub input: Udrs,
    pub output: Udrs,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CombinatorResult {
    pub sign: Sign,
    /// Constraints beyond the daughters' union added at this node.
    pub introduced_constraints: Vec<SubordConstraint>,
    /// Set when disambiguation changed the node's UDRS.
    pub before_disambiguation: Option<Udrs>,
    pub decisions: Vec<ReadingDecision>,
    pub steps: Vec<DisambiguationStep>,
}

impl CombinatorResult {
    fn plain(sign: Sign, introduced_constraints: Vec<SubordConstraint>) -> Self {
        CombinatorResult {
            sign,
            introduced_constraints,
            before_disambiguation: None,
            decisions: Vec::new(),
            steps: Vec::new(),
        }
    }

    /// Runs the decision and, if a reading is forced, disambiguates.
    fn disambiguate(&mut self, decision: ReadingDecision) -> Result<()> {
        self.decisions.push(decision);
        let Some(reading) = decision.verdict.reading() else {
            return Ok(());
        };
        let input = self.sign.udrs.clone();
        let output = pl_dis(&input, decision.target.key, reading)?;
        if self.before_disambiguation.is_none() {
            self.before_disambiguation = Some(input.clone());
        }
        self.sign.udrs = output.clone();
        self.steps.push(DisambiguationStep {
            decision,
            input,
            output,
        });
        Ok(())
    }
}

fn mismatch(msg: impl Into<String>) -> Error {
    Error::SubcatMismatch(msg.into())
}

fn add_all(udrs: &mut Udrs, constraints: impl IntoIterator<Item = SubordConstraint>) -> Vec<SubordConstraint> {
    constraints.into_iter().filter(|c| udrs.add_constraint(*c)).collect()
}

/// The relation name of the verb predicate at `label`.
pub fn verb_rel(u: &Udrs, label: Label) -> Option<&str> {
    u.conds.iter().find_map(|c| match &c.payload {
        Payload::Predicate { rel, args } if c.label == label && args.iter().any(|a| matches!(a, crate::udrs::ArgSlot::Verb(_))) => {
            Some(rel.as_str())
        }
        _ => None,
    })
}

/// Saturates `slot` of the verbal `head` with the argument `np`.
fn link_argument(head: &Sign, np: &Sign, slot: SlotId, subcat: Vec<SubcatSlot>, cat: Cat, np_first: bool) -> Result<CombinatorResult> {
    if np.cat != Cat::Np || !np.is_saturated() {
        return Err(mismatch(format!("expected a saturated NP, got {}", np.cat)));
    }
    if head.udrs.slots.get(&slot) != Some(&SlotState::Open) {
        return Err(mismatch("argument slot is not open"));
    }
    let (a, b) = if np_first { (&np.udrs, &head.udrs) } else { (&head.udrs, &np.udrs) };
    let mut udrs = Udrs::union(head.udrs.ls, a, b);
    let mut delta = vec![SubordConstraint::weak(np.udrs.ls.min, head.udrs.ls.min)];
    if np.head_type.is_potentially_scope_bearing() {
        delta.push(SubordConstraint::conditional(
            (np.udrs.ls.max, np.udrs.ls.min),
            (head.udrs.ls.max, np.udrs.ls.max),
        ));
    }
    let introduced = add_all(&mut udrs, delta);
    let value = dref_res(&np.udrs)?;
    udrs.slots.insert(slot, SlotState::Linked { np: np.udrs.ls.key(), value });
    let sign = Sign {
        cat,
        subcat,
        udrs,
        ..head.clone()
    };
    Ok(CombinatorResult::plain(sign, introduced))
}

/// Head-complement combination: determiner with noun, verb with object NP,
/// or clausal verb with its `that`-clause.
pub fn combine_head_comp(head: &Sign, comp: &Sign) -> Result<CombinatorResult> {
    let mut subcat = head.subcat.clone();
    let slot = subcat.pop().ok_or_else(|| mismatch("head is saturated"))?;
    match slot {
        SubcatSlot::Nominal(idx) => {
            let Cat::Noun(number) = comp.cat else {
                return Err(mismatch(format!("determiner expects a noun, got {}", comp.cat)));
            };
            if number != idx.number {
                return Err(mismatch("determiner and noun disagree in number"));
            }
            let noun = comp.index.ok_or_else(|| mismatch("noun without index"))?;
            let comp_udrs = if noun.label == idx.label && noun.dref == idx.dref {
                comp.udrs.clone()
            } else {
                comp.udrs.rename(&[(noun.label, idx.label)], &[(noun.dref, idx.dref)])
            };
            let sign = Sign {
                cat: Cat::Np,
                subcat,
                udrs: Udrs::union(head.udrs.ls, &head.udrs, &comp_udrs),
                ..head.clone()
            };
            Ok(CombinatorResult::plain(sign, Vec::new()))
        }
        SubcatSlot::Np { case: Case::Acc, slot } => link_argument(head, comp, slot, subcat, Cat::Vp, false),
        SubcatSlot::Clause => {
            if comp.cat != Cat::Cp {
                return Err(mismatch(format!("expected a clause, got {}", comp.cat)));
            }
            let mut udrs = Udrs::union(head.udrs.ls, &head.udrs, &comp.udrs);
            let introduced = add_all(&mut udrs, [SubordConstraint::weak(head.udrs.ls.min, comp.udrs.ls.max)]);
            let sign = Sign {
                cat: Cat::Vp,
                subcat,
                udrs,
                ..head.clone()
            };
            Ok(CombinatorResult::plain(sign, introduced))
        }
        other => Err(mismatch(format!("head-comp cannot fill {other:?}"))),
    }
}

/// Head-subject combination; a collective-only verb disambiguates a plural
/// subject at once.
pub fn combine_head_subj(head: &Sign, subj: &Sign) -> Result<CombinatorResult> {
    let [SubcatSlot::Np { case: Case::Nom, slot }] = head.subcat[..] else {
        return Err(mismatch("head does not expect a subject only"));
    };
    let mut result = link_argument(head, subj, slot, Vec::new(), Cat::S, true)?;
    result.sign.subject_reading = None;
    if let Some(reading) = head.subject_reading {
        let key = subj.udrs.ls.key();
        if subj.head_type == HeadType::Plural && is_pending(&result.sign.udrs, key) {
            let target = crate::disambiguation::plural_target(&result.sign.udrs, key)?;
            result.disambiguate(ReadingDecision {
                target,
                verdict: reading.into(),
            })?;
        }
    }
    Ok(result)
}

/// A complementizer over its sentence: the clause's L-MAX is identified with
/// the complementizer's ceiling. Embedded ceilings dominate their clause's
/// L-MIN; at the root every maximal label is placed below the top label.
pub fn combine_functional(func: &Sign, s: &Sign) -> Result<CombinatorResult> {
    if func.subcat != [SubcatSlot::Sentence] || s.cat != Cat::S || !s.is_saturated() {
        return Err(mismatch("functional head expects a saturated sentence"));
    }
    let ceiling = func.ceiling.ok_or_else(|| mismatch("functional head without ceiling"))?;
    let mut udrs = Udrs::union(Ls::new(ceiling, s.udrs.ls.min), &func.udrs, &s.udrs);
    let mut introduced = Vec::new();
    if s.udrs.ls.max != ceiling {
        introduced.extend(add_all(&mut udrs, [SubordConstraint::identity(s.udrs.ls.max, ceiling)]));
    }
    let cat = if ceiling.is_top() {
        let cl = closure_over(&udrs.subord, udrs.labels())?;
        let top = cl.class(Label::TOP);
        let mut done = Vec::new();
        let mut delta = Vec::new();
        for l in udrs.labels() {
            let c = cl.class(l);
            if c == top || done.contains(&c) {
                continue;
            }
            done.push(c);
            let dominated = cl
                .domain()
                .iter()
                .any(|&m| cl.class(m) != top && cl.class(m) != c && cl.ge(m, l));
            if !dominated {
                delta.push(SubordConstraint::weak(Label::TOP, l));
            }
        }
        introduced.extend(add_all(&mut udrs, delta));
        Cat::S
    } else {
        introduced.extend(add_all(&mut udrs, [SubordConstraint::weak(ceiling, s.udrs.ls.min)]));
        Cat::Cp
    };
    let mut sign = Sign::new(cat, HeadType::Comp, udrs);
    sign.ceiling = Some(ceiling);
    Ok(CombinatorResult::plain(sign, introduced))
}

/// Discourse coordination; plurals of the preceding context are offered to
/// the knowledge rules with the new sentence as continuation.
pub fn combine_coord(left: &Sign, right: &Sign, knowledge: &Knowledge, context_nps: &[NpInfo]) -> Result<CombinatorResult> {
    for (side, s) in [("left", left), ("right", right)] {
        if !matches!(s.cat, Cat::S | Cat::Discourse) || !s.is_saturated() {
            return Err(mismatch(format!("{side} conjunct is not a sentence")));
        }
    }
    let mut udrs = Udrs::union(Ls::new(Label::TOP, Label::TOP), &left.udrs, &right.udrs);
    let introduced = add_all(
        &mut udrs,
        [left.udrs.ls.max, right.udrs.ls.max]
            .into_iter()
            .filter(|m| !m.is_top())
            .map(|m| SubordConstraint::weak(Label::TOP, m)),
    );
    let mut result = CombinatorResult::plain(Sign::new(Cat::Discourse, HeadType::Coord, udrs), introduced);
    for np in context_nps {
        if let Some(d) = knowledge.decide(&result.sign.udrs, np, Some(&right.udrs)) {
            result.disambiguate(d)?;
        }
    }
    Ok(result)
}

/// Filler daughters contribute nothing; the fragment has none.
pub fn combine_head_filler(head: &Sign, _filler: &Sign) -> CombinatorResult {
    CombinatorResult::plain(head.clone(), Vec::new())
}

/// A fully interpreted derivation.
#[derive(Clone, Debug)]
pub struct Interpretation {
    pub tree: DerivationNode,
    pub sign: Sign,
    pub nps: Vec<NpInfo>,
    pub decisions: Vec<ReadingDecision>,
    pub steps: Vec<DisambiguationStep>,
}

impl Interpretation {
    pub fn udrs(&self) -> &Udrs {
        &self.sign.udrs
    }
}

#[derive(Default)]
struct State {
    np_index: HashMap<usize, usize>,
    sentence_starts: Vec<usize>,
    np_offset: usize,
    sentence_offset: usize,
    nps: Vec<NpInfo>,
    decisions: Vec<ReadingDecision>,
    steps: Vec<DisambiguationStep>,
}

impl State {
    fn sentence_of(&self, start: usize) -> usize {
        let local = self.sentence_starts.iter().rposition(|&s| s <= start).unwrap_or(0);
        local + self.sentence_offset
    }
}

fn is_argument_site(n: &DerivationNode) -> bool {
    match n.construction {
        Construction::HeadSubj => true,
        Construction::HeadComp => n.head.as_ref().is_some_and(|h| h.cat == Cat::Tv),
        _ => false,
    }
}

pub struct Interpreter<'a> {
    pub lexicon: &'a Lexicon,
    pub knowledge: &'a Knowledge,
}

impl<'a> Interpreter<'a> {
    pub fn new(lexicon: &'a Lexicon, knowledge: &'a Knowledge) -> Self {
        Interpreter { lexicon, knowledge }
    }

    /// Interprets every parse of `text`.
    pub fn interpret_text(&self, text: &str) -> Result<Vec<Interpretation>> {
        parse_text(text, self.lexicon)?
            .iter()
            .map(|t| self.interpret(t))
            .collect()
    }

    /// Interprets the first parse of `text`.
    pub fn interpret_first(&self, text: &str) -> Result<Interpretation> {
        let tree = parse_text(text, self.lexicon)?.swap_remove(0);
        self.interpret(&tree)
    }

    pub fn interpret(&self, tree: &DerivationNode) -> Result<Interpretation> {
        self.interpret_from(tree, 0, 0)
    }

    /// Interprets `tree` as a continuation of a discourse that already has
    /// `np_offset` argument NPs and `sentence_offset` sentences.
    pub fn interpret_from(&self, tree: &DerivationNode, np_offset: usize, sentence_offset: usize) -> Result<Interpretation> {
        let mut st = State {
            np_offset,
            sentence_offset,
            ..State::default()
        };
        for n in tree.walk() {
            if is_argument_site(n) {
                let np = n.nonhead.as_ref().unwrap();
                let k = st.np_index.len() + 1 + np_offset;
                st.np_index.insert(np.start, k);
            }
            let root_sentence = n.construction == Construction::Functional
                && n.head.as_ref().is_some_and(|h| h.word.is_none());
            if root_sentence {
                st.sentence_starts.push(n.start);
            }
        }
        let mut tree = tree.clone();
        let sign = self.node(&mut tree, &mut st)?;
        if !sign.is_saturated() {
            return Err(mismatch("root sign is unsaturated"));
        }
        st.nps.sort_by_key(|n| n.index);
        Ok(Interpretation {
            tree,
            sign,
            nps: st.nps,
            decisions: st.decisions,
            steps: st.steps,
        })
    }

    fn leaf(&self, n: &DerivationNode) -> Sign {
        match &n.entry {
            Some(e) => e.instantiate(),
            None => root_complementizer(),
        }
    }

    fn node(&self, n: &mut DerivationNode, st: &mut State) -> Result<Sign> {
        if n.is_leaf() {
            let sign = self.leaf(n);
            n.sign = Some(sign.clone());
            return Ok(sign);
        }
        let result = match n.construction {
            Construction::HeadComp if n.head.as_ref().is_some_and(|h| matches!(h.cat, Cat::Det(_))) => {
                let det = self.node(n.head.as_mut().unwrap(), st)?;
                let noun_node = n.nonhead.as_mut().unwrap();
                let entry = noun_node.entry.clone().ok_or_else(|| mismatch("noun leaf without entry"))?;
                let Some(SubcatSlot::Nominal(idx)) = det.subcat.last().copied() else {
                    return Err(mismatch("determiner without nominal slot"));
                };
                let noun = entry_noun_at(&entry.rel, entry.number(), idx.label, idx.dref);
                noun_node.sign = Some(noun.clone());
                combine_head_comp(&det, &noun)?
            }
            Construction::HeadComp => {
                let head = self.node(n.head.as_mut().unwrap(), st)?;
                let comp = self.node(n.nonhead.as_mut().unwrap(), st)?;
                let r = combine_head_comp(&head, &comp)?;
                if head.cat == Cat::Tv {
                    self.record_np(n, &head, &comp, Role::Object, st);
                }
                r
            }
            Construction::HeadSubj => {
                let subj = self.node(n.nonhead.as_mut().unwrap(), st)?;
                let head = self.node(n.head.as_mut().unwrap(), st)?;
                let mut r = combine_head_subj(&head, &subj)?;
                self.record_np(n, &head, &subj, Role::Subject, st);
                let sentence = st.sentence_of(n.start);
                let nps: Vec<NpInfo> = st.nps.iter().filter(|np| np.sentence == sentence).cloned().collect();
                for np in &nps {
                    if let Some(d) = self.knowledge.decide(&r.sign.udrs, np, None) {
                        r.disambiguate(d)?;
                    }
                }
                r
            }
            Construction::Functional => {
                let func = self.node(n.head.as_mut().unwrap(), st)?;
                let s = self.node(n.nonhead.as_mut().unwrap(), st)?;
                combine_functional(&func, &s)?
            }
            Construction::Coord => {
                let left = self.node(n.head.as_mut().unwrap(), st)?;
                let right = self.node(n.nonhead.as_mut().unwrap(), st)?;
                let current = st.sentence_of(n.nonhead.as_ref().unwrap().start);
                let context: Vec<NpInfo> = st.nps.iter().filter(|np| np.sentence < current).cloned().collect();
                combine_coord(&left, &right, self.knowledge, &context)?
            }
            Construction::Lexical => unreachable!(),
        };
        n.introduced = result.introduced_constraints.clone();
        n.before_disambiguation = result.before_disambiguation.clone();
        n.sign = Some(result.sign.clone());
        st.decisions.extend(result.decisions);
        st.steps.extend(result.steps);
        Ok(result.sign)
    }

    fn record_np(&self, n: &DerivationNode, head: &Sign, np: &Sign, role: Role, st: &mut State) {
        let start = n.nonhead.as_ref().unwrap().start;
        let index = st.np_index.get(&start).copied().unwrap_or(st.np_offset + st.nps.len() + 1);
        let group = np.udrs.referent_at(np.udrs.ls.max).filter(|r| r.is_group());
        st.nps.push(NpInfo {
            index,
            key: np.udrs.ls.key(),
            plural: np.head_type == HeadType::Plural,
            group,
            sentence: st.sentence_of(start),
            role,
            verb: verb_rel(&head.udrs, head.udrs.ls.min).unwrap_or_default().to_string(),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{check_udrs, closure};
    use crate::lexicon::{entry_indef_det, entry_noun_at, entry_plural_det, entry_quant_det, entry_transitive_verb};
    use crate::udrs::{ArgValue, ConstraintKind};

    fn np(det: Sign, noun: &str) -> Sign {
        let SubcatSlot::Nominal(idx) = det.subcat[0] else { panic!() };
        let n = entry_noun_at(noun, idx.number, idx.label, idx.dref);
        combine_head_comp(&det, &n).unwrap().sign
    }

    #[test]
    fn every_plus_noun_puts_noun_in_restrictor() {
        let s = np(entry_quant_det(), "lawyer");
        let (_, res, _) = s.udrs.quantifier_at(s.udrs.ls.max).unwrap();
        let x = s.udrs.referent_at(res).unwrap();
        assert!(s.udrs.conds.iter().any(|c| c.label == res
            && c.payload == Payload::Predicate { rel: "lawyer".into(), args: vec![crate::udrs::ArgSlot::Direct(x)] }));
        assert_eq!(s.cat, Cat::Np);
        assert_eq!(s.head_type, HeadType::Quant);
    }

    #[test]
    fn noun_with_own_index_is_coindexed() {
        let det = entry_indef_det();
        let noun = crate::lexicon::entry_noun("secretary", crate::lexicon::Number::Sg);
        let s = combine_head_comp(&det, &noun).unwrap().sign;
        let l = s.udrs.ls.max;
        let y = s.udrs.referent_at(l).unwrap();
        assert_eq!(s.udrs.conds.len(), 2);
        assert!(s.udrs.conds.iter().all(|c| c.label == l));
        assert!(s.udrs.conds.iter().any(|c| c.arg_slots() == vec![crate::udrs::ArgSlot::Direct(y)]));
    }

    #[test]
    fn object_indefinite_adds_only_clause_four() {
        let verb = entry_transitive_verb("hire");
        let obj = np(entry_indef_det(), "secretary");
        let r = combine_head_comp(&verb, &obj).unwrap();
        assert_eq!(r.introduced_constraints, vec![SubordConstraint::weak(obj.udrs.ls.min, verb.udrs.ls.min)]);
        let pred = r.sign.udrs.conds.iter().find(|c| c.label == verb.udrs.ls.min).unwrap();
        let y = obj.udrs.referent_at(obj.udrs.ls.max).unwrap();
        assert_eq!(r.sign.udrs.arg_value(&pred.arg_slots()[1]), ArgValue::Resolved(y));
        assert_eq!(r.sign.udrs.ls, verb.udrs.ls);
    }

    #[test]
    fn object_quantifier_adds_conditional_and_resolves() {
        let verb = entry_transitive_verb("hire");
        let obj = np(entry_quant_det(), "secretary");
        let r = combine_head_comp(&verb, &obj).unwrap();
        let (q, s) = (obj.udrs.ls.max, obj.udrs.ls.min);
        assert_eq!(
            r.introduced_constraints,
            vec![
                SubordConstraint::weak(s, verb.udrs.ls.min),
                SubordConstraint::conditional((q, s), (verb.udrs.ls.max, q)),
            ]
        );
        let pred = r.sign.udrs.conds.iter().find(|c| c.label == verb.udrs.ls.min).unwrap();
        assert!(matches!(r.sign.udrs.arg_value(&pred.arg_slots()[1]), ArgValue::Resolved(_)));
    }

    #[test]
    fn object_plural_stays_pending() {
        let verb = entry_transitive_verb("hire");
        let obj = np(entry_plural_det(), "lawyers");
        let r = combine_head_comp(&verb, &obj).unwrap();
        assert_eq!(r.introduced_constraints.len(), 2);
        assert_eq!(r.sign.udrs.pending_keys(), vec![obj.udrs.ls.key()]);
    }

    #[test]
    fn mismatches() {
        let verb = entry_transitive_verb("hire");
        let det = entry_quant_det();
        assert!(matches!(combine_head_comp(&verb, &det), Err(Error::SubcatMismatch(_))));
        assert!(matches!(combine_head_subj(&verb, &np(entry_indef_det(), "clerk")), Err(Error::SubcatMismatch(_))));
        assert!(matches!(combine_functional(&crate::lexicon::entry_complementizer(), &verb), Err(Error::SubcatMismatch(_))));
    }

    fn interpret(text: &str) -> Interpretation {
        let lex = Lexicon::builtin();
        let k = Knowledge::from_lexicon(&lex);
        Interpreter::new(&lex, &k).interpret_first(text).unwrap()
    }

    #[test]
    fn plural_sentence_reconstructs_underspecified_form() {
        let i = interpret("The lawyers hired a secretary.");
        let u = i.udrs();
        assert!(check_udrs(u).is_empty());
        assert_eq!(u.conds.len(), 5);
        assert_eq!(u.condition_labels().len(), 3);
        assert_eq!(u.pending_keys().len(), 1);
        let kinds: Vec<ConstraintKind> = u.subord.iter().map(|c| c.kind).collect();
        assert_eq!(kinds.iter().filter(|k| **k == ConstraintKind::Conditional).count(), 1);
        let cl = closure(&u.subord).unwrap();
        for l in u.condition_labels() {
            assert!(cl.ge(Label::TOP, l));
        }
    }

    #[test]
    fn functional_root_adds_no_conditions() {
        let i = interpret("John left.");
        let root = &i.tree;
        assert_eq!(root.construction, Construction::Functional);
        let s = root.nonhead.as_ref().unwrap().sign.as_ref().unwrap();
        assert_eq!(s.udrs.conds, i.udrs().conds);
        assert_eq!(i.udrs().conds.len(), 3);
        assert!(check_udrs(i.udrs()).is_empty());
    }

    #[test]
    fn gathered_forces_collective() {
        let i = interpret("The lawyers gathered.");
        assert!(i.udrs().pending_keys().is_empty());
        assert_eq!(i.steps.len(), 1);
        let key = i.nps[0].key;
        assert!(i.udrs().subord.contains(&SubordConstraint::identity(key.max, key.min)));
    }

    #[test]
    fn embedded_ceiling_is_below_matrix_verb() {
        let i = interpret("Every lawyer believed that every clerk left.");
        let u = i.udrs();
        assert!(check_udrs(u).is_empty());
        let cl = closure(&u.subord).unwrap();
        let believe = u.conds.iter().find(|c| matches!(&c.payload, Payload::Predicate { rel, .. } if rel == "believe")).unwrap().label;
        let every: Vec<Label> = u.conds.iter().filter(|c| matches!(c.payload, Payload::Quantifier { .. })).map(|c| c.label).collect();
        assert_eq!(every.len(), 2);
        assert!(cl.ge(believe, every[1]) || cl.ge(believe, every[0]));
    }

    #[test]
    fn np_indices_follow_surface_order() {
        let i = interpret("The lawyers hired every secretary.");
        assert_eq!(i.nps.len(), 2);
        assert_eq!((i.nps[0].index, i.nps[0].role), (1, Role::Subject));
        assert_eq!((i.nps[1].index, i.nps[1].role), (2, Role::Object));
        assert_eq!(i.nps[0].verb, "hire");
        assert!(i.nps[0].plural && !i.nps[1].plural);
    }
}
