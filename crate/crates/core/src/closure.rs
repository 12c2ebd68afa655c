//! Deductive closure of subordination constraints and the semilattice check.
//!
//! Identity is handled by quotienting labels into classes; `≥` and `>` are
//! then closed over classes. Mutual `≥` collapses two classes. Conditional
//! constraints join the active set as soon as their antecedent is derivable,
//! and the whole procedure is iterated to a fixpoint.

use std::collections::HashMap;
use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::udrs::{ConstraintKind, Label, Payload, SubordConstraint, Udrs};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The derived subordination relation over a fixed label domain.
#[derive(Clone, Debug)]
pub struct Closure {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    class_of: Vec<usize>,
    members: Vec<Vec<Label>>,
    ge: Vec<Vec<bool>>,
    gt: Vec<Vec<bool>>,
    inactive: Vec<SubordConstraint>,
    activated: Vec<SubordConstraint>,
}

/// Closes `subord` over the labels it mentions plus the top label.
pub fn closure<'a>(subord: impl IntoIterator<Item = &'a SubordConstraint>) -> Result<Closure> {
    closure_over(subord, std::iter::empty())
}

/// Closes `subord` over the labels it mentions, the top label, and `extra`.
pub fn closure_over<'a>(
    subord: impl IntoIterator<Item = &'a SubordConstraint>,
    extra: impl IntoIterator<Item = Label>,
) -> Result<Closure> {
    let constraints: Vec<SubordConstraint> = subord.into_iter().copied().collect();
    let mut domain: IndexSet<Label> = IndexSet::new();
    domain.insert(Label::TOP);
    for c in &constraints {
        domain.extend(c.labels());
    }
    domain.extend(extra);
    let labels: Vec<Label> = domain.into_iter().collect();
    let index: HashMap<Label, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let n = labels.len();

    let mut active: Vec<SubordConstraint> = Vec::new();
    let mut inactive: Vec<SubordConstraint> = Vec::new();
    for c in constraints {
        if c.is_conditional() {
            if !inactive.contains(&c) {
                inactive.push(c);
            }
        } else {
            active.push(c);
        }
    }
    let mut activated = Vec::new();
    let mut uf = UnionFind::new(n);

    loop {
        for c in &active {
            if c.kind == ConstraintKind::Identity {
                uf.union(index[&c.left], index[&c.right]);
            }
        }
        let (class_of, k, ge, gt) = loop {
            let mut roots: Vec<usize> = Vec::new();
            let mut class_of = vec![0; n];
            for (i, slot) in class_of.iter_mut().enumerate() {
                let r = uf.find(i);
                *slot = match roots.iter().position(|&x| x == r) {
                    Some(p) => p,
                    None => {
                        roots.push(r);
                        roots.len() - 1
                    }
                };
            }
            let k = roots.len();
            let mut ge = vec![vec![false; k]; k];
            let mut base_gt = vec![vec![false; k]; k];
            for (i, row) in ge.iter_mut().enumerate() {
                row[i] = true;
            }
            for c in &active {
                let (a, b) = (class_of[index[&c.left]], class_of[index[&c.right]]);
                match c.kind {
                    ConstraintKind::Weak => ge[a][b] = true,
                    ConstraintKind::Strict => {
                        ge[a][b] = true;
                        base_gt[a][b] = true;
                    }
                    _ => {}
                }
            }
            for m in 0..k {
                for i in 0..k {
                    if ge[i][m] {
                        let row = ge[m].clone();
                        for (cell, reach) in ge[i].iter_mut().zip(row) {
                            *cell |= reach;
                        }
                    }
                }
            }
            // gt = ge ∘ base_gt ∘ ge
            let mut left = vec![vec![false; k]; k];
            for i in 0..k {
                for m in 0..k {
                    if ge[i][m] {
                        for j in 0..k {
                            if base_gt[m][j] {
                                left[i][j] = true;
                            }
                        }
                    }
                }
            }
            let mut gt = vec![vec![false; k]; k];
            for i in 0..k {
                for m in 0..k {
                    if left[i][m] {
                        for j in 0..k {
                            if ge[m][j] {
                                gt[i][j] = true;
                            }
                        }
                    }
                }
            }
            let mut merged = false;
            for i in 0..n {
                for j in (i + 1)..n {
                    let (a, b) = (class_of[i], class_of[j]);
                    if a != b && ge[a][b] && ge[b][a] && uf.union(i, j) {
                        merged = true;
                    }
                }
            }
            if !merged {
                break (class_of, k, ge, gt);
            }
        };

        if let Some(c) = (0..k).find(|&c| gt[c][c]) {
            let label = labels[(0..n).find(|&i| class_of[i] == c).unwrap()];
            return Err(Error::Cycle(label));
        }

        let mut fired = Vec::new();
        inactive.retain(|c| {
            let (a, b) = c.antecedent.expect("conditional without antecedent");
            if gt[class_of[index[&a]]][class_of[index[&b]]] {
                fired.push(*c);
                false
            } else {
                true
            }
        });
        if fired.is_empty() {
            let mut members = vec![Vec::new(); k];
            for (i, l) in labels.iter().enumerate() {
                members[class_of[i]].push(*l);
            }
            return Ok(Closure {
                labels,
                index,
                class_of,
                members,
                ge,
                gt,
                inactive,
                activated,
            });
        }
        for c in fired {
            active.push(SubordConstraint::weak(c.left, c.right));
            activated.push(c);
        }
    }
}

impl Closure {
    pub fn domain(&self) -> &[Label] {
        &self.labels
    }

    pub fn contains(&self, l: Label) -> bool {
        self.index.contains_key(&l)
    }

    pub fn class(&self, l: Label) -> Option<usize> {
        self.index.get(&l).map(|&i| self.class_of[i])
    }

    /// Identity classes, each listed in domain order.
    pub fn classes(&self) -> &[Vec<Label>] {
        &self.members
    }

    /// `a ≥ b`: b is weakly subordinate to a.
    pub fn ge(&self, a: Label, b: Label) -> bool {
        if a == b {
            return true;
        }
        match (self.class(a), self.class(b)) {
            (Some(x), Some(y)) => self.ge[x][y],
            _ => false,
        }
    }

    /// `a > b`: b is strictly subordinate to a.
    pub fn gt(&self, a: Label, b: Label) -> bool {
        match (self.class(a), self.class(b)) {
            (Some(x), Some(y)) => self.gt[x][y],
            _ => false,
        }
    }

    pub fn eq(&self, a: Label, b: Label) -> bool {
        a == b
            || matches!((self.class(a), self.class(b)), (Some(x), Some(y)) if x == y)
    }

    /// Conditionals whose antecedent became derivable.
    pub fn activated(&self) -> &[SubordConstraint] {
        &self.activated
    }

    /// Conditionals still inert.
    pub fn inactive(&self) -> &[SubordConstraint] {
        &self.inactive
    }

    /// The derived relation as an explicit constraint list: one identity,
    /// strict or weak constraint per ordered pair of distinct labels (the
    /// strongest that holds), followed by the inert conditionals.
    pub fn relations(&self) -> Vec<SubordConstraint> {
        let mut out = Vec::new();
        for (i, &a) in self.labels.iter().enumerate() {
            for (j, &b) in self.labels.iter().enumerate() {
                if i == j {
                    continue;
                }
                if self.eq(a, b) {
                    if i < j {
                        out.push(SubordConstraint::identity(a, b));
                    }
                } else if self.gt(a, b) {
                    out.push(SubordConstraint::strict(a, b));
                } else if self.ge(a, b) {
                    out.push(SubordConstraint::weak(a, b));
                }
            }
        }
        out.extend(self.inactive.iter().copied());
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    StrictCycle(Label),
    NotDominatedByTop(Label),
    /// A condition label that no subordination constraint mentions.
    UnconstrainedLabel(Label),
    /// A quantifier whose restrictor, scope and own label are not distinct.
    MalformedQuantifier(Label),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::StrictCycle(l) => write!(f, "strict cycle through {l}"),
            Violation::NotDominatedByTop(l) => write!(f, "{l} is not below the top label"),
            Violation::UnconstrainedLabel(l) => write!(f, "{l} is outside the subordination order"),
            Violation::MalformedQuantifier(l) => {
                write!(f, "quantifier at {l} reuses a label for restrictor or scope")
            }
        }
    }
}

/// Reports every semilattice violation of `u`; an empty list means ok.
pub fn check_udrs(u: &Udrs) -> Vec<Violation> {
    let mut out = Vec::new();
    for c in &u.conds {
        if let Payload::Quantifier { res, scope, .. } = c.payload {
            if res == scope || res == c.label || scope == c.label {
                out.push(Violation::MalformedQuantifier(c.label));
            }
        }
    }
    let closure = match closure(&u.subord) {
        Ok(c) => c,
        Err(Error::Cycle(l)) => {
            out.push(Violation::StrictCycle(l));
            return out;
        }
        Err(_) => unreachable!("closure only fails with a cycle"),
    };
    let mut mentioned: IndexSet<Label> = IndexSet::new();
    for c in &u.conds {
        for l in c.labels() {
            if !closure.contains(l) {
                out.push(Violation::UnconstrainedLabel(l));
            }
            mentioned.insert(l);
        }
    }
    for c in &u.subord {
        mentioned.extend(c.labels());
    }
    for l in mentioned {
        if closure.contains(l) && !closure.ge(Label::TOP, l) {
            out.push(Violation::NotDominatedByTop(l));
        }
    }
    out
}
