//! Stable display names and the text, DOT and box renderings.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::resolver::{Drs, DrsCondition};
use crate::udrs::{ArgSlot, ConstraintKind, Label, Payload, Referent, SlotState, Udrs};

/// Display names in first-mention order: `l0` is the top label, other
/// labels are `l1`, `l2`, ...; referents are `x<n>` or `X<n>` for groups.
#[derive(Clone, Debug, Default)]
pub struct Naming {
    labels: HashMap<Label, String>,
    referents: HashMap<Referent, String>,
    next_label: usize,
    next_referent: usize,
}

impl Naming {
    pub fn new(u: &Udrs) -> Self {
        let mut n = Naming::default();
        n.labels.insert(Label::TOP, "l0".into());
        n.label(u.ls.max);
        n.label(u.ls.min);
        for c in &u.subord {
            for l in c.labels() {
                n.label(l);
            }
        }
        for c in &u.conds {
            n.label(c.label);
            match &c.payload {
                Payload::ReferentIntro { dref } => n.referent(*dref),
                Payload::Predicate { args, .. } => {
                    for a in args {
                        n.arg(u, a);
                    }
                }
                Payload::Quantifier { res, scope, .. } => {
                    n.label(*res);
                    n.label(*scope);
                }
                Payload::Membership { element, group } => {
                    n.arg(u, element);
                    n.arg(u, group);
                }
            }
        }
        n
    }

    fn label(&mut self, l: Label) {
        if !self.labels.contains_key(&l) {
            self.next_label += 1;
            self.labels.insert(l, format!("l{}", self.next_label));
        }
    }

    fn referent(&mut self, r: Referent) {
        if !self.referents.contains_key(&r) {
            self.next_referent += 1;
            let prefix = if r.is_group() { "X" } else { "x" };
            self.referents.insert(r, format!("{prefix}{}", self.next_referent));
        }
    }

    fn arg(&mut self, u: &Udrs, a: &ArgSlot) {
        match a {
            ArgSlot::Direct(r) => self.referent(*r),
            ArgSlot::Verb(id) => {
                if let Some(SlotState::Linked { np, value }) = u.slots.get(id) {
                    if let Some(r) = value {
                        self.referent(*r);
                    }
                    self.label(np.max);
                    self.label(np.min);
                }
            }
        }
    }

    /// Names referents a UDRS does not mention, e.g. in foreign readings.
    pub fn extend_referents(&mut self, refs: impl IntoIterator<Item = Referent>) {
        for r in refs {
            self.referent(r);
        }
    }

    pub fn l(&self, l: Label) -> String {
        self.labels.get(&l).cloned().unwrap_or_else(|| l.to_string())
    }

    pub fn r(&self, r: Referent) -> String {
        self.referents.get(&r).cloned().unwrap_or_else(|| r.to_string())
    }

    fn arg_text(&self, u: &Udrs, a: &ArgSlot) -> String {
        match a {
            ArgSlot::Direct(r) => self.r(*r),
            ArgSlot::Verb(id) => match u.slots.get(id) {
                Some(SlotState::Linked { value: Some(r), .. }) => self.r(*r),
                Some(SlotState::Linked { np, value: None }) => format!("?<{},{}>", self.l(np.max), self.l(np.min)),
                _ => "_".into(),
            },
        }
    }

    pub fn constraint_text(&self, c: &crate::udrs::SubordConstraint) -> String {
        let (a, b) = (self.l(c.left), self.l(c.right));
        match c.kind {
            ConstraintKind::Weak => format!("{a} >= {b}"),
            ConstraintKind::Strict => format!("{a} > {b}"),
            ConstraintKind::Identity => format!("{a} = {b}"),
            ConstraintKind::Conditional => {
                let (p, q) = c.antecedent.expect("conditional without antecedent");
                format!("{} > {} => {a} >= {b}", self.l(p), self.l(q))
            }
        }
    }

    pub fn condition_text(&self, u: &Udrs, c: &crate::udrs::Condition) -> String {
        match &c.payload {
            Payload::ReferentIntro { dref } => self.r(*dref),
            Payload::Predicate { rel, args } => {
                let args: Vec<String> = args.iter().map(|a| self.arg_text(u, a)).collect();
                format!("{rel}({})", args.join(", "))
            }
            Payload::Quantifier { rel, res, scope } => {
                format!("{}({}, {})", rel.name(), self.l(*res), self.l(*scope))
            }
            Payload::Membership { element, group } => {
                format!("{} in {}", self.arg_text(u, element), self.arg_text(u, group))
            }
        }
    }
}

/// Multi-line text rendering of a UDRS.
pub fn udrs_text(u: &Udrs) -> String {
    let n = Naming::new(u);
    let mut out = String::new();
    let _ = writeln!(out, "LS      <{}, {}>", n.l(u.ls.max), n.l(u.ls.min));
    for (i, c) in u.subord.iter().enumerate() {
        let head = if i == 0 { "SUBORD" } else { "" };
        let _ = writeln!(out, "{head:<8}{}", n.constraint_text(c));
    }
    if u.subord.is_empty() {
        let _ = writeln!(out, "SUBORD  {{}}");
    }
    for (i, c) in u.conds.iter().enumerate() {
        let head = if i == 0 { "CONDS" } else { "" };
        let _ = writeln!(out, "{head:<8}{}: {}", n.l(c.label), n.condition_text(u, c));
    }
    if u.conds.is_empty() {
        let _ = writeln!(out, "CONDS   {{}}");
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz digraph: one node per label, edges from the superordinate label.
/// Conditional constraints are drawn dashed.
pub fn to_dot(u: &Udrs) -> String {
    let n = Naming::new(u);
    let mut out = String::from("digraph udrs {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n");
    for l in u.labels() {
        let mut text = n.l(l);
        for c in u.conds.iter().filter(|c| c.label == l) {
            text.push_str("\\n");
            text.push_str(&dot_escape(&n.condition_text(u, c)));
        }
        let _ = writeln!(out, "  \"{}\" [label=\"{}\"];", n.l(l), text);
    }
    for c in &u.subord {
        let (a, b) = (n.l(c.left), n.l(c.right));
        let attrs = match c.kind {
            ConstraintKind::Weak => "label=\">=\"".to_string(),
            ConstraintKind::Strict => "label=\">\", style=bold".to_string(),
            ConstraintKind::Identity => "label=\"=\", dir=none".to_string(),
            ConstraintKind::Conditional => {
                let (p, q) = c.antecedent.expect("conditional without antecedent");
                format!("label=\"if {} > {}\", style=dashed", n.l(p), n.l(q))
            }
        };
        let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [{attrs}];");
    }
    out.push_str("}\n");
    out
}

fn condition_lines(c: &DrsCondition, name: &dyn Fn(Referent) -> String) -> Vec<String> {
    match c {
        DrsCondition::Predicate { rel, args } => {
            let args: Vec<String> = args.iter().map(|r| name(*r)).collect();
            vec![format!("{rel}({})", args.join(", "))]
        }
        DrsCondition::Member { element, group } => vec![format!("{} in {}", name(*element), name(*group))],
        DrsCondition::Duplex { quant, res, scope } => {
            let left = box_lines(res, name);
            let right = box_lines(scope, name);
            let arrow = format!(" -{}-> ", quant.name());
            let gap = " ".repeat(arrow.len());
            let height = left.len().max(right.len());
            let lw = left.iter().map(|l| l.chars().count()).max().unwrap_or(0);
            let mid = (height - 1) / 2;
            (0..height)
                .map(|i| {
                    let l = left.get(i).cloned().unwrap_or_default();
                    let pad = " ".repeat(lw - l.chars().count());
                    let r = right.get(i).cloned().unwrap_or_default();
                    let join = if i == mid { &arrow } else { &gap };
                    format!("{l}{pad}{join}{r}").trim_end().to_string()
                })
                .collect()
        }
    }
}

fn box_lines(d: &Drs, name: &dyn Fn(Referent) -> String) -> Vec<String> {
    let universe: Vec<String> = d.universe.iter().map(|r| name(*r)).collect();
    let header = universe.join(" ");
    let body: Vec<String> = d.conditions.iter().flat_map(|c| condition_lines(c, name)).collect();
    let width = body
        .iter()
        .chain(std::iter::once(&header))
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(0)
        .max(1);
    let rule = format!("+{}+", "-".repeat(width + 2));
    let row = |s: &str| format!("| {s}{} |", " ".repeat(width - s.chars().count()));
    let mut out = vec![rule.clone(), row(&header), rule.clone()];
    out.extend(body.iter().map(|l| row(l)));
    out.push(rule);
    out
}

/// ASCII box notation for a DRS.
pub fn drs_box(d: &Drs, name: &dyn Fn(Referent) -> String) -> String {
    let mut s = box_lines(d, name).join("\n");
    s.push('\n');
    s
}

pub fn drs_json(d: &Drs, name: &dyn Fn(Referent) -> String) -> Value {
    let conditions: Vec<Value> = d
        .conditions
        .iter()
        .map(|c| match c {
            DrsCondition::Predicate { rel, args } => {
                json!({"rel": rel, "args": args.iter().map(|r| name(*r)).collect::<Vec<_>>()})
            }
            DrsCondition::Member { element, group } => json!({"member": name(*element), "group": name(*group)}),
            DrsCondition::Duplex { quant, res, scope } => {
                json!({"quant": quant.name(), "res": drs_json(res, name), "scope": drs_json(scope, name)})
            }
        })
        .collect();
    json!({
        "universe": d.universe.iter().map(|r| name(*r)).collect::<Vec<_>>(),
        "conditions": conditions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disambiguation::Knowledge;
    use crate::lexicon::Lexicon;
    use crate::principles::Interpreter;
    use crate::resolver::enumerate_readings;

    fn udrs(text: &str) -> Udrs {
        let lex = Lexicon::builtin();
        let k = Knowledge::new();
        Interpreter::new(&lex, &k).interpret_first(text).unwrap().sign.udrs
    }

    #[test]
    fn names_follow_first_mention() {
        let u = udrs("The lawyers hired a secretary.");
        let n = Naming::new(&u);
        assert_eq!(n.l(Label::TOP), "l0");
        assert_eq!(n.l(u.ls.min), "l1");
        let text = udrs_text(&u);
        assert!(text.starts_with("LS      <l0, l1>"));
        assert!(text.contains("lawyers(X1)"));
        assert!(text.contains("hire(?<"));
    }

    #[test]
    fn dot_has_node_per_condition_label() {
        let u = udrs("Every lawyer hired a secretary.");
        let n = Naming::new(&u);
        let dot = to_dot(&u);
        for l in u.condition_labels() {
            let decl = format!("  \"{}\" [label=", n.l(l));
            assert_eq!(dot.matches(&decl).count(), 1);
        }
        let edges = dot.lines().filter(|l| l.contains("->")).collect::<Vec<_>>();
        assert_eq!(edges.len(), u.subord.len());
        let dashed = edges.iter().filter(|l| l.contains("dashed")).count();
        assert_eq!(dashed, u.subord.iter().filter(|c| c.is_conditional()).count());
    }

    #[test]
    fn box_rendering() {
        let u = udrs("Every lawyer hired a secretary.");
        let n = Naming::new(&u);
        let name = |r| n.r(r);
        for d in enumerate_readings(&u).unwrap() {
            let b = drs_box(&d, &name);
            assert!(b.contains("-every->"));
            assert!(b.contains("hire("));
            assert!(b.is_ascii());
            let widths: Vec<usize> = b.lines().map(|l| l.len()).collect();
            assert!(widths.iter().all(|w| *w == widths[0]));
            let j = drs_json(&d, &name);
            assert!(j["conditions"].is_array());
        }
    }
}
