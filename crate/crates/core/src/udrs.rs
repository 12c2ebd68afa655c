//! Labels, discourse referents, labelled conditions and the UDRS container.
//!
//! A [`Udrs`] is the triple of distinguished labels, subordination constraints
//! and labelled conditions. Verb argument positions are held in a slot table
//! so that filling a delayed argument never rewrites a stored condition: the
//! condition keeps pointing at its slot, and the slot's state is refined
//! monotonically from open, to linked-and-pending, to resolved.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use indexmap::IndexSet;

static NEXT_ID: AtomicU32 = AtomicU32::new(1);

fn next_id() -> u32 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// Node of the subordination semilattice. Id 0 is reserved for the top label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Label(u32);

impl Label {
    pub const TOP: Label = Label(0);

    pub fn is_top(self) -> bool {
        self.0 == 0
    }

    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_top() {
            write!(f, "l_top")
        } else {
            write!(f, "l{}", self.0)
        }
    }
}

/// Returns a label never issued before in this process.
pub fn fresh_label() -> Label {
    Label(next_id())
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sort {
    Individual,
    Group,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Referent {
    id: u32,
    sort: Sort,
}

impl Referent {
    pub fn sort(self) -> Sort {
        self.sort
    }

    pub fn id(self) -> u32 {
        self.id
    }

    pub fn is_group(self) -> bool {
        self.sort == Sort::Group
    }
}

impl fmt::Display for Referent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sort {
            Sort::Individual => write!(f, "x{}", self.id),
            Sort::Group => write!(f, "X{}", self.id),
        }
    }
}

pub fn fresh_referent(sort: Sort) -> Referent {
    Referent {
        id: next_id(),
        sort,
    }
}

/// Identifies one verb argument position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SlotId(u32);

pub fn fresh_slot() -> SlotId {
    SlotId(next_id())
}

/// The distinguished label pair of an argument NP. Delayed argument
/// resolutions are addressed through it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PendingKey {
    pub max: Label,
    pub min: Label,
}

impl PendingKey {
    pub fn new(max: Label, min: Label) -> Self {
        PendingKey { max, min }
    }
}

impl fmt::Display for PendingKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.max, self.min)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ArgSlot {
    /// A referent fixed at lexical level (noun arguments, membership).
    Direct(Referent),
    /// A verb argument position whose filler is looked up in the slot table.
    Verb(SlotId),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SlotState {
    /// Not yet saturated by an argument NP.
    Open,
    /// Saturated by the NP with distinguished labels `np`; `value` is `None`
    /// while the resolution is delayed.
    Linked {
        np: PendingKey,
        value: Option<Referent>,
    },
}

impl SlotState {
    fn refines(&self, other: &SlotState) -> bool {
        match (self, other) {
            (_, SlotState::Open) => true,
            (SlotState::Open, _) => false,
            (
                SlotState::Linked { np: a, value: va },
                SlotState::Linked { np: b, value: vb },
            ) => a == b && (vb.is_none() || va == vb),
        }
    }
}

/// The observable state of an argument position.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArgValue {
    Resolved(Referent),
    Pending(PendingKey),
    Open,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ConstraintKind {
    Weak,
    Strict,
    Identity,
    Conditional,
}

/// `left ≥ right`, `left > right`, `left = right`, or, for conditional
/// constraints, `antecedent.0 > antecedent.1 ⇒ left ≥ right`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SubordConstraint {
    pub kind: ConstraintKind,
    pub left: Label,
    pub right: Label,
    pub antecedent: Option<(Label, Label)>,
}

impl SubordConstraint {
    pub fn weak(left: Label, right: Label) -> Self {
        Self::plain(ConstraintKind::Weak, left, right)
    }

    pub fn strict(left: Label, right: Label) -> Self {
        Self::plain(ConstraintKind::Strict, left, right)
    }

    pub fn identity(left: Label, right: Label) -> Self {
        Self::plain(ConstraintKind::Identity, left, right)
    }

    /// `if_strict.0 > if_strict.1 ⇒ then_weak.0 ≥ then_weak.1`
    pub fn conditional(if_strict: (Label, Label), then_weak: (Label, Label)) -> Self {
        SubordConstraint {
            kind: ConstraintKind::Conditional,
            left: then_weak.0,
            right: then_weak.1,
            antecedent: Some(if_strict),
        }
    }

    fn plain(kind: ConstraintKind, left: Label, right: Label) -> Self {
        SubordConstraint {
            kind,
            left,
            right,
            antecedent: None,
        }
    }

    pub fn is_conditional(&self) -> bool {
        self.kind == ConstraintKind::Conditional
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        let ante = self.antecedent.into_iter().flat_map(|(a, b)| [a, b]);
        [self.left, self.right].into_iter().chain(ante)
    }
}

impl fmt::Display for SubordConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ConstraintKind::Weak => write!(f, "{} >= {}", self.left, self.right),
            ConstraintKind::Strict => write!(f, "{} > {}", self.left, self.right),
            ConstraintKind::Identity => write!(f, "{} = {}", self.left, self.right),
            ConstraintKind::Conditional => {
                let (a, b) = self.antecedent.expect("conditional without antecedent");
                write!(f, "{} > {} => {} >= {}", a, b, self.left, self.right)
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum QuantRel {
    Every,
    /// Distribution over the members of a group, introduced by
    /// distributive plural disambiguation.
    Distribution,
}

impl QuantRel {
    pub fn name(self) -> &'static str {
        match self {
            QuantRel::Every => "every",
            QuantRel::Distribution => "dist",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Payload {
    ReferentIntro {
        dref: Referent,
    },
    Predicate {
        rel: String,
        args: Vec<ArgSlot>,
    },
    Quantifier {
        rel: QuantRel,
        res: Label,
        scope: Label,
    },
    Membership {
        element: ArgSlot,
        group: ArgSlot,
    },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Condition {
    pub label: Label,
    pub payload: Payload,
}

impl Condition {
    pub fn referent(label: Label, dref: Referent) -> Self {
        Condition {
            label,
            payload: Payload::ReferentIntro { dref },
        }
    }

    pub fn predicate(label: Label, rel: impl Into<String>, args: Vec<ArgSlot>) -> Self {
        Condition {
            label,
            payload: Payload::Predicate {
                rel: rel.into(),
                args,
            },
        }
    }

    pub fn quantifier(label: Label, rel: QuantRel, res: Label, scope: Label) -> Self {
        Condition {
            label,
            payload: Payload::Quantifier { rel, res, scope },
        }
    }

    pub fn membership(label: Label, element: Referent, group: Referent) -> Self {
        Condition {
            label,
            payload: Payload::Membership {
                element: ArgSlot::Direct(element),
                group: ArgSlot::Direct(group),
            },
        }
    }

    /// The condition's own label, then any sub-box labels it mentions.
    pub fn labels(&self) -> Vec<Label> {
        match self.payload {
            Payload::Quantifier { res, scope, .. } => vec![self.label, res, scope],
            _ => vec![self.label],
        }
    }

    pub fn arg_slots(&self) -> Vec<ArgSlot> {
        match &self.payload {
            Payload::Predicate { args, .. } => args.clone(),
            Payload::Membership { element, group } => vec![*element, *group],
            _ => Vec::new(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Ls {
    pub max: Label,
    pub min: Label,
}

impl Ls {
    pub fn new(max: Label, min: Label) -> Self {
        Ls { max, min }
    }

    pub fn key(self) -> PendingKey {
        PendingKey::new(self.max, self.min)
    }
}

/// Underspecified DRS: distinguished labels, subordination constraints and
/// labelled conditions, plus the argument slot table. Constraint and
/// condition sets keep insertion order so output is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Udrs {
    pub ls: Ls,
    pub subord: IndexSet<SubordConstraint>,
    pub conds: IndexSet<Condition>,
    pub slots: BTreeMap<SlotId, SlotState>,
}

impl Udrs {
    pub fn new(ls: Ls) -> Self {
        Udrs {
            ls,
            subord: IndexSet::new(),
            conds: IndexSet::new(),
            slots: BTreeMap::new(),
        }
    }

    /// The UDRS containing nothing but the top label.
    pub fn empty() -> Self {
        Self::new(Ls::new(Label::TOP, Label::TOP))
    }

    pub fn add_constraint(&mut self, c: SubordConstraint) -> bool {
        self.subord.insert(c)
    }

    pub fn add_condition(&mut self, c: Condition) -> bool {
        self.conds.insert(c)
    }

    /// All labels in first-mention order: LS, SUBORD, then CONDS.
    pub fn labels(&self) -> IndexSet<Label> {
        let mut out = IndexSet::new();
        out.insert(self.ls.max);
        out.insert(self.ls.min);
        for c in &self.subord {
            out.extend(c.labels());
        }
        for c in &self.conds {
            out.extend(c.labels());
        }
        for state in self.slots.values() {
            if let SlotState::Linked { np, .. } = state {
                out.insert(np.max);
                out.insert(np.min);
            }
        }
        out
    }

    /// Labels that carry at least one condition.
    pub fn condition_labels(&self) -> IndexSet<Label> {
        self.conds.iter().map(|c| c.label).collect()
    }

    /// The referent introduced at `label`, if any.
    pub fn referent_at(&self, label: Label) -> Option<Referent> {
        self.conds.iter().find_map(|c| match c.payload {
            Payload::ReferentIntro { dref } if c.label == label => Some(dref),
            _ => None,
        })
    }

    pub fn quantifier_at(&self, label: Label) -> Option<(QuantRel, Label, Label)> {
        self.conds.iter().find_map(|c| match c.payload {
            Payload::Quantifier { rel, res, scope } if c.label == label => Some((rel, res, scope)),
            _ => None,
        })
    }

    pub fn arg_value(&self, slot: &ArgSlot) -> ArgValue {
        match slot {
            ArgSlot::Direct(r) => ArgValue::Resolved(*r),
            ArgSlot::Verb(id) => match self.slots.get(id) {
                Some(SlotState::Linked { value: Some(r), .. }) => ArgValue::Resolved(*r),
                Some(SlotState::Linked { np, value: None }) => ArgValue::Pending(*np),
                Some(SlotState::Open) | None => ArgValue::Open,
            },
        }
    }

    /// Keys of argument NPs whose referent is still delayed.
    pub fn pending_keys(&self) -> Vec<PendingKey> {
        let mut keys: Vec<PendingKey> = Vec::new();
        for state in self.slots.values() {
            if let SlotState::Linked { np, value: None } = state {
                if !keys.contains(np) {
                    keys.push(*np);
                }
            }
        }
        keys
    }

    /// The slot state refinement of `other` by `self`: every slot of
    /// `other` is present here in the same or a more specific state.
    pub fn slots_refine(&self, other: &Udrs) -> bool {
        other.slots.iter().all(|(id, theirs)| {
            self.slots
                .get(id)
                .is_some_and(|ours| ours.refines(theirs))
        })
    }

    /// Componentwise containment: SUBORD, CONDS, and slot refinement.
    pub fn extends(&self, other: &Udrs) -> bool {
        other.subord.is_subset(&self.subord)
            && other.conds.is_subset(&self.conds)
            && self.slots_refine(other)
    }

    /// Replaces `from` by `to` everywhere. Used to coindex a noun with the
    /// restrictor position its determiner selects.
    pub fn rename(&self, labels: &[(Label, Label)], referents: &[(Referent, Referent)]) -> Udrs {
        let l = |x: Label| {
            labels
                .iter()
                .find(|(from, _)| *from == x)
                .map_or(x, |(_, to)| *to)
        };
        let r = |x: Referent| {
            referents
                .iter()
                .find(|(from, _)| *from == x)
                .map_or(x, |(_, to)| *to)
        };
        let slot = |s: ArgSlot| match s {
            ArgSlot::Direct(x) => ArgSlot::Direct(r(x)),
            other => other,
        };
        let subord = self
            .subord
            .iter()
            .map(|c| SubordConstraint {
                kind: c.kind,
                left: l(c.left),
                right: l(c.right),
                antecedent: c.antecedent.map(|(a, b)| (l(a), l(b))),
            })
            .collect();
        let conds = self
            .conds
            .iter()
            .map(|c| Condition {
                label: l(c.label),
                payload: match &c.payload {
                    Payload::ReferentIntro { dref } => Payload::ReferentIntro { dref: r(*dref) },
                    Payload::Predicate { rel, args } => Payload::Predicate {
                        rel: rel.clone(),
                        args: args.iter().copied().map(slot).collect(),
                    },
                    Payload::Quantifier { rel, res, scope } => Payload::Quantifier {
                        rel: *rel,
                        res: l(*res),
                        scope: l(*scope),
                    },
                    Payload::Membership { element, group } => Payload::Membership {
                        element: slot(*element),
                        group: slot(*group),
                    },
                },
            })
            .collect();
        let slots = self
            .slots
            .iter()
            .map(|(id, st)| {
                let st = match st {
                    SlotState::Open => SlotState::Open,
                    SlotState::Linked { np, value } => SlotState::Linked {
                        np: PendingKey::new(l(np.max), l(np.min)),
                        value: value.map(r),
                    },
                };
                (*id, st)
            })
            .collect();
        Udrs {
            ls: Ls::new(l(self.ls.max), l(self.ls.min)),
            subord,
            conds,
            slots,
        }
    }

    /// A new UDRS with the given LS and the union of both inputs. Slots
    /// present in both keep the more specific state.
    pub fn union(ls: Ls, a: &Udrs, b: &Udrs) -> Udrs {
        let (subord, conds) = merge(a, b);
        let mut slots = a.slots.clone();
        for (id, st) in &b.slots {
            match slots.get(id) {
                Some(existing) if existing.refines(st) => {}
                _ => {
                    slots.insert(*id, *st);
                }
            }
        }
        Udrs {
            ls,
            subord,
            conds,
            slots,
        }
    }
}

/// Set union of SUBORD and CONDS. The caller picks the LS.
pub fn merge(u1: &Udrs, u2: &Udrs) -> (IndexSet<SubordConstraint>, IndexSet<Condition>) {
    let mut subord = u1.subord.clone();
    subord.extend(u2.subord.iter().copied());
    let mut conds = u1.conds.clone();
    conds.extend(u2.conds.iter().cloned());
    (subord, conds)
}
