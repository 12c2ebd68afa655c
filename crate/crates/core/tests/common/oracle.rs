//! Brute-force reading counter that shares no code with the resolver.
//!
//! Every label is tried in every box, one label at a time; a full
//! assignment is kept when the box tree is a tree rooted at the top box
//! and every constraint holds. Readings are the distinct vectors giving
//! each condition's box.

use std::collections::{BTreeSet, HashMap};

use udrs_core::{ConstraintKind, Label, Payload, SubordConstraint, Udrs};

pub struct Oracle {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    /// (own label, restrictor label, scope label) as label indices.
    quants: Vec<(usize, usize, usize)>,
    constraints: Vec<SubordConstraint>,
    cond_labels: Vec<usize>,
}

const TOP_BOX: usize = 0;

fn res_box(q: usize) -> usize {
    1 + 2 * q
}

fn scope_box(q: usize) -> usize {
    2 + 2 * q
}

impl Oracle {
    pub fn new(u: &Udrs) -> Self {
        let mut labels = vec![Label::TOP];
        let push = |l: Label, labels: &mut Vec<Label>| {
            if !labels.contains(&l) {
                labels.push(l);
            }
        };
        push(u.ls.max, &mut labels);
        push(u.ls.min, &mut labels);
        for c in &u.subord {
            for l in c.labels() {
                push(l, &mut labels);
            }
        }
        for c in &u.conds {
            for l in c.labels() {
                push(l, &mut labels);
            }
        }
        let index: HashMap<Label, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let quants = u
            .conds
            .iter()
            .filter_map(|c| match c.payload {
                Payload::Quantifier { res, scope, .. } => Some((index[&c.label], index[&res], index[&scope])),
                _ => None,
            })
            .collect();
        let cond_labels = u.conds.iter().map(|c| index[&c.label]).collect();
        Oracle {
            labels,
            index,
            quants,
            constraints: u.subord.iter().copied().collect(),
            cond_labels,
        }
    }

    fn boxes(&self) -> usize {
        1 + 2 * self.quants.len()
    }

    fn parent(&self, assign: &[usize], b: usize) -> Option<usize> {
        if b == TOP_BOX {
            None
        } else {
            Some(assign[self.quants[(b - 1) / 2].0])
        }
    }

    fn is_tree(&self, assign: &[usize]) -> bool {
        (0..self.boxes()).all(|b| {
            let mut cur = b;
            for _ in 0..=self.boxes() {
                match self.parent(assign, cur) {
                    None => return true,
                    Some(p) => cur = p,
                }
            }
            false
        })
    }

    fn inside(&self, assign: &[usize], outer: usize, inner: usize) -> bool {
        let mut cur = Some(inner);
        while let Some(b) = cur {
            if b == outer {
                return true;
            }
            cur = self.parent(assign, b);
        }
        false
    }

    fn holds(&self, assign: &[usize], c: &SubordConstraint) -> bool {
        let a = assign[self.index[&c.left]];
        let b = assign[self.index[&c.right]];
        let weak = |x, y| self.inside(assign, x, y);
        let strict = |x, y| x != y && self.inside(assign, x, y);
        match c.kind {
            ConstraintKind::Weak => weak(a, b),
            ConstraintKind::Strict => strict(a, b),
            ConstraintKind::Identity => a == b,
            ConstraintKind::Conditional => {
                let (p, q) = c.antecedent.unwrap();
                let (p, q) = (assign[self.index[&p]], assign[self.index[&q]]);
                !strict(p, q) || weak(a, b)
            }
        }
    }

    /// The placement of every condition in each admissible reading.
    pub fn readings(&self) -> BTreeSet<Vec<usize>> {
        const FREE: usize = usize::MAX;
        let mut assign = vec![FREE; self.labels.len()];
        assign[0] = TOP_BOX;
        for (q, &(_, res, scope)) in self.quants.iter().enumerate() {
            for (l, b) in [(res, res_box(q)), (scope, scope_box(q))] {
                if assign[l] != FREE && assign[l] != b {
                    return BTreeSet::new();
                }
                assign[l] = b;
            }
        }
        let mut order: Vec<usize> = self.quants.iter().map(|q| q.0).collect();
        order.extend(0..self.labels.len());
        let mut seen = vec![false; self.labels.len()];
        order.retain(|&l| assign[l] == FREE && !std::mem::replace(&mut seen[l], true));
        let tree_ready = order
            .iter()
            .take_while(|&&l| self.quants.iter().any(|q| q.0 == l))
            .count();

        let mut out = BTreeSet::new();
        self.search(&order, tree_ready, 0, &mut assign, &mut out);
        out
    }

    fn search(
        &self,
        order: &[usize],
        tree_ready: usize,
        step: usize,
        assign: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if step >= tree_ready {
            if !self.is_tree(assign) {
                return;
            }
            let assigned = |l: Label| assign[self.index[&l]] != usize::MAX;
            let ok = self
                .constraints
                .iter()
                .filter(|c| c.labels().all(assigned))
                .all(|c| self.holds(assign, c));
            if !ok {
                return;
            }
        }
        if step == order.len() {
            out.insert(self.cond_labels.iter().map(|&l| assign[l]).collect());
            return;
        }
        for b in 0..self.boxes() {
            assign[order[step]] = b;
            self.search(order, tree_ready, step + 1, assign, out);
        }
        assign[order[step]] = usize::MAX;
    }

    pub fn count(&self) -> usize {
        self.readings().len()
    }
}

pub fn count(u: &Udrs) -> usize {
    Oracle::new(u).count()
}
