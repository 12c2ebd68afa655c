//! Enumeration of the fully scoped readings of a UDRS.
//!
//! Each quantifier condition opens a restrictor box and a scope box below
//! the box its own label is placed in; the top label names the outermost
//! box. A scoping assigns every identity class of labels to a box so that
//! `≥` means "inside or equal", `>` means "strictly inside", and `=` means
//! "same box". Conditionals are checked against each candidate: when the
//! candidate realizes the antecedent, the consequent must hold too.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::closure::closure_over;
use crate::disambiguation::{pl_dis, Reading};
use crate::error::{Error, Result};
use crate::udrs::{ArgValue, ConstraintKind, Label, Payload, QuantRel, Referent, SubordConstraint, Udrs};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BoxId {
    Top,
    /// Restrictor box of the quantifier condition at the label.
    Res(Label),
    Scope(Label),
}

/// A placement of every label of a UDRS into the box tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scoping {
    pub placement: BTreeMap<Label, BoxId>,
    parent: BTreeMap<BoxId, BoxId>,
}

impl Scoping {
    pub fn box_of(&self, l: Label) -> Option<BoxId> {
        self.placement.get(&l).copied()
    }

    pub fn parent(&self, b: BoxId) -> Option<BoxId> {
        self.parent.get(&b).copied()
    }

    /// Whether `inner` is `outer` or nested inside it.
    pub fn within(&self, outer: BoxId, inner: BoxId) -> bool {
        let mut cur = Some(inner);
        while let Some(b) = cur {
            if b == outer {
                return true;
            }
            cur = self.parent(b);
        }
        false
    }

    pub fn strictly_within(&self, outer: BoxId, inner: BoxId) -> bool {
        outer != inner && self.within(outer, inner)
    }

    /// Whether the placement satisfies `c`.
    pub fn satisfies(&self, c: &SubordConstraint) -> bool {
        let (Some(a), Some(b)) = (self.box_of(c.left), self.box_of(c.right)) else {
            return false;
        };
        match c.kind {
            ConstraintKind::Weak => self.within(a, b),
            ConstraintKind::Strict => self.strictly_within(a, b),
            ConstraintKind::Identity => a == b,
            ConstraintKind::Conditional => {
                let (p, q) = c.antecedent.expect("conditional without antecedent");
                match (self.box_of(p), self.box_of(q)) {
                    (Some(p), Some(q)) if self.strictly_within(p, q) => self.within(a, b),
                    _ => true,
                }
            }
        }
    }

    /// Builds the DRS this scoping describes.
    pub fn to_drs(&self, u: &Udrs) -> Result<Drs> {
        let mut boxes: BTreeMap<BoxId, Drs> = BTreeMap::new();
        let mut duplexes: Vec<(BoxId, QuantRel, Label)> = Vec::new();
        for c in &u.conds {
            let b = self.box_of(c.label).ok_or_else(|| Error::Document(format!("unplaced label {}", c.label)))?;
            let arg = |s| match u.arg_value(s) {
                ArgValue::Resolved(r) => Ok(r),
                ArgValue::Pending(key) => Err(Error::UnresolvedSlot { key }),
                ArgValue::Open => Err(Error::SubcatMismatch("open argument slot".into())),
            };
            let d = boxes.entry(b).or_default();
            match &c.payload {
                Payload::ReferentIntro { dref } => {
                    d.universe.insert(*dref);
                }
                Payload::Predicate { rel, args } => {
                    let args = args.iter().map(arg).collect::<Result<Vec<_>>>()?;
                    d.conditions.insert(DrsCondition::Predicate { rel: rel.clone(), args });
                }
                Payload::Membership { element, group } => {
                    d.conditions.insert(DrsCondition::Member {
                        element: arg(element)?,
                        group: arg(group)?,
                    });
                }
                Payload::Quantifier { rel, .. } => duplexes.push((b, *rel, c.label)),
            }
        }
        // children before parents: deepest boxes first
        let depth = |b: BoxId| {
            let mut n = 0;
            let mut cur = b;
            while let Some(p) = self.parent(cur) {
                n += 1;
                cur = p;
            }
            n
        };
        duplexes.sort_by_key(|(b, _, _)| std::cmp::Reverse(depth(*b)));
        for (b, quant, q) in duplexes {
            let res = boxes.remove(&BoxId::Res(q)).unwrap_or_default();
            let scope = boxes.remove(&BoxId::Scope(q)).unwrap_or_default();
            boxes.entry(b).or_default().conditions.insert(DrsCondition::Duplex {
                quant,
                res: Box::new(res),
                scope: Box::new(scope),
            });
        }
        Ok(boxes.remove(&BoxId::Top).unwrap_or_default())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DrsCondition {
    Predicate { rel: String, args: Vec<Referent> },
    Member { element: Referent, group: Referent },
    Duplex { quant: QuantRel, res: Box<Drs>, scope: Box<Drs> },
}

/// A fully scoped DRS: a universe and a set of conditions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Drs {
    pub universe: BTreeSet<Referent>,
    pub conditions: BTreeSet<DrsCondition>,
}

impl Drs {
    pub fn is_empty(&self) -> bool {
        self.universe.is_empty() && self.conditions.is_empty()
    }

    /// All referents, in first-occurrence order of a depth-first walk.
    pub fn referents(&self) -> Vec<Referent> {
        fn go(d: &Drs, out: &mut Vec<Referent>) {
            let push = |r: Referent, out: &mut Vec<Referent>| {
                if !out.contains(&r) {
                    out.push(r);
                }
            };
            for r in &d.universe {
                push(*r, out);
            }
            for c in &d.conditions {
                match c {
                    DrsCondition::Predicate { args, .. } => args.iter().for_each(|r| push(*r, out)),
                    DrsCondition::Member { element, group } => {
                        push(*element, out);
                        push(*group, out);
                    }
                    DrsCondition::Duplex { res, scope, .. } => {
                        go(res, out);
                        go(scope, out);
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// One-line rendering with referents named by `name`; conditions are
    /// sorted on their rendered text so the result ignores referent ids.
    pub fn render_with(&self, name: &dyn Fn(Referent) -> String) -> String {
        let mut universe: Vec<String> = self.universe.iter().map(|r| name(*r)).collect();
        universe.sort();
        let mut conds: Vec<String> = self
            .conditions
            .iter()
            .map(|c| match c {
                DrsCondition::Predicate { rel, args } => {
                    let args: Vec<String> = args.iter().map(|r| name(*r)).collect();
                    format!("{rel}({})", args.join(","))
                }
                DrsCondition::Member { element, group } => format!("{}∈{}", name(*element), name(*group)),
                DrsCondition::Duplex { quant, res, scope } => {
                    format!("{}⟨{} | {}⟩", quant.name(), res.render_with(name), scope.render_with(name))
                }
            })
            .collect();
        conds.sort();
        format!("[{} | {}]", universe.join(" "), conds.join(", "))
    }

    /// A rendering invariant under renaming referents of the same sort.
    pub fn canonical(&self) -> String {
        let refs = self.referents();
        let named = |perm: &[usize]| {
            let map: HashMap<Referent, String> = refs
                .iter()
                .zip(perm)
                .map(|(r, i)| (*r, format!("{}{}", if r.is_group() { "X" } else { "x" }, i)))
                .collect();
            self.render_with(&|r| map[&r].clone())
        };
        let start: Vec<usize> = (0..refs.len()).collect();
        if refs.len() > 7 {
            return named(&start);
        }
        let mut best: Option<String> = None;
        let mut perm = start;
        loop {
            let s = named(&perm);
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.unwrap_or_default()
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A referent used where it is not accessible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BindingViolation {
    pub referent: Referent,
    pub condition: String,
}

/// Checks that every referent occurrence is declared in the current box,
/// an enclosing box, or, inside a scope box, its restrictor.
pub fn check_binding(d: &Drs) -> Vec<BindingViolation> {
    fn go(d: &Drs, outer: &BTreeSet<Referent>, out: &mut Vec<BindingViolation>) {
        let mut acc = outer.clone();
        acc.extend(d.universe.iter().copied());
        for c in &d.conditions {
            let mut need = |r: &Referent| {
                if !acc.contains(r) {
                    out.push(BindingViolation {
                        referent: *r,
                        condition: format!("{c:?}"),
                    });
                }
            };
            match c {
                DrsCondition::Predicate { args, .. } => args.iter().for_each(&mut need),
                DrsCondition::Member { element, group } => {
                    need(element);
                    need(group);
                }
                DrsCondition::Duplex { res, scope, .. } => {
                    go(res, &acc, out);
                    let mut inner = acc.clone();
                    inner.extend(res.universe.iter().copied());
                    go(scope, &inner, out);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(d, &BTreeSet::new(), &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct EnumOptions {
    /// Branch every pending plural into its collective and distributive
    /// disambiguations instead of failing.
    pub expand_plurals: bool,
}

/// Every admissible scoping of `u`. Pending slots do not matter here.
pub fn enumerate_scopings(u: &Udrs) -> Result<Vec<Scoping>> {
    let cl = closure_over(&u.subord, u.labels()).map_err(|e| match e {
        Error::Cycle(l) => Error::InconsistentConstraints(format!("strict cycle through {l}")),
        other => other,
    })?;
    let classes = cl.classes().len();
    let class = |l: Label| cl.class(l).expect("label in closure domain");

    let quants: Vec<(Label, Label, Label)> = u
        .conds
        .iter()
        .filter_map(|c| match c.payload {
            Payload::Quantifier { res, scope, .. } => Some((c.label, res, scope)),
            _ => None,
        })
        .collect();

    let mut pinned: Vec<Option<BoxId>> = vec![None; classes];
    let mut pin = |c: usize, b: BoxId| match pinned[c] {
        Some(p) if p != b => false,
        _ => {
            pinned[c] = Some(b);
            true
        }
    };
    let mut ok = pin(class(Label::TOP), BoxId::Top);
    for &(q, res, scope) in &quants {
        ok &= pin(class(res), BoxId::Res(q));
        ok &= pin(class(scope), BoxId::Scope(q));
        ok &= class(q) != class(res) && class(q) != class(scope);
    }
    if !ok {
        return Ok(Vec::new());
    }

    let mut boxes = vec![BoxId::Top];
    for &(q, _, _) in &quants {
        boxes.push(BoxId::Res(q));
        boxes.push(BoxId::Scope(q));
    }

    // quantifier classes first so the box tree is fixed early
    let mut order: Vec<usize> = Vec::new();
    for &(q, _, _) in &quants {
        let c = class(q);
        if pinned[c].is_none() && !order.contains(&c) {
            order.push(c);
        }
    }
    let tree_ready = order.len();
    for (c, p) in pinned.iter().enumerate() {
        if p.is_none() && !order.contains(&c) {
            order.push(c);
        }
    }

    let constraints: Vec<SubordConstraint> = u
        .subord
        .iter()
        .copied()
        .filter(|c| c.kind != ConstraintKind::Identity)
        .collect();
    // the step after which each constraint is fully assigned
    let step_of = |c: usize| order.iter().position(|&o| o == c).map_or(0, |p| p + 1);
    let mut checks: Vec<Vec<SubordConstraint>> = vec![Vec::new(); order.len() + 1];
    for c in &constraints {
        let last = c.labels().map(|l| step_of(class(l))).max().unwrap_or(0).max(tree_ready);
        checks[last].push(*c);
    }

    let mut search = Search {
        cl: &cl,
        domain: cl.domain().to_vec(),
        quants: &quants,
        boxes: &boxes,
        order: &order,
        tree_ready,
        checks: &checks,
        assign: pinned,
        out: Vec::new(),
    };
    if tree_ready == 0 {
        let s = search.scoping();
        if !search.tree_ok() || !checks[0].iter().all(|k| s.satisfies(k)) {
            return Ok(Vec::new());
        }
    }
    search.run(0);
    Ok(search.out)
}

struct Search<'a> {
    cl: &'a crate::closure::Closure,
    domain: Vec<Label>,
    quants: &'a [(Label, Label, Label)],
    boxes: &'a [BoxId],
    order: &'a [usize],
    tree_ready: usize,
    checks: &'a [Vec<SubordConstraint>],
    assign: Vec<Option<BoxId>>,
    out: Vec<Scoping>,
}

impl Search<'_> {
    fn scoping(&self) -> Scoping {
        let mut parent = BTreeMap::new();
        for &(q, _, _) in self.quants {
            if let Some(b) = self.assign[self.cl.class(q).unwrap()] {
                parent.insert(BoxId::Res(q), b);
                parent.insert(BoxId::Scope(q), b);
            }
        }
        let placement = self
            .domain
            .iter()
            .filter_map(|&l| self.assign[self.cl.class(l).unwrap()].map(|b| (l, b)))
            .collect();
        Scoping { placement, parent }
    }

    /// The box tree is acyclic: every box reaches the top.
    fn tree_ok(&self) -> bool {
        let s = self.scoping();
        self.boxes.iter().all(|&b| {
            let mut cur = b;
            for _ in 0..=self.boxes.len() {
                match s.parent(cur) {
                    None => return cur == BoxId::Top,
                    Some(p) => cur = p,
                }
            }
            false
        })
    }

    fn run(&mut self, step: usize) {
        if step == self.order.len() {
            self.out.push(self.scoping());
            return;
        }
        let c = self.order[step];
        for &b in self.boxes {
            self.assign[c] = Some(b);
            if step + 1 == self.tree_ready && !self.tree_ok() {
                continue;
            }
            if step + 1 >= self.tree_ready {
                let s = self.scoping();
                if !self.checks[step + 1].iter().all(|k| s.satisfies(k)) {
                    continue;
                }
            }
            self.run(step + 1);
        }
        self.assign[c] = None;
    }
}

fn distinct(drss: impl IntoIterator<Item = Drs>) -> Vec<Drs> {
    let mut seen = BTreeSet::new();
    drss.into_iter().filter(|d| seen.insert(d.clone())).collect()
}

/// All distinct readings of a UDRS without pending slots.
pub fn enumerate_readings(u: &Udrs) -> Result<Vec<Drs>> {
    enumerate_with(u, EnumOptions::default())
}

pub fn enumerate_with(u: &Udrs, opts: EnumOptions) -> Result<Vec<Drs>> {
    if let Some(&key) = u.pending_keys().first() {
        if !opts.expand_plurals {
            return Err(Error::UnresolvedSlot { key });
        }
        let mut all = Vec::new();
        for reading in [Reading::Collective, Reading::Distributive] {
            all.extend(enumerate_with(&pl_dis(u, key, reading)?, opts)?);
        }
        return Ok(distinct(all));
    }
    let drss = enumerate_scopings(u)?
        .iter()
        .map(|s| s.to_drs(u))
        .collect::<Result<Vec<_>>>()?;
    Ok(distinct(drss))
}

pub fn count_readings(u: &Udrs) -> Result<usize> {
    enumerate_readings(u).map(|r| r.len())
}

/// The expansions of every pending plural, both ways.
pub fn expand_plurals(u: &Udrs) -> Result<Vec<Udrs>> {
    match u.pending_keys().first() {
        None => Ok(vec![u.clone()]),
        Some(&key) => {
            let mut out = Vec::new();
            for reading in [Reading::Collective, Reading::Distributive] {
                out.extend(expand_plurals(&pl_dis(u, key, reading)?)?);
            }
            Ok(out)
        }
    }
}
