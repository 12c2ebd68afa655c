//! Canonical JSON form of a UDRS.
//!
//! ```json
//! {"ls": {"max": "l0", "min": "l1"},
//!  "subord": [{"kind": "weak", "left": "l2", "right": "l1"},
//!             {"kind": "conditional", "left": "l0", "right": "l2", "antecedent": ["l2", "l3"]}],
//!  "conds": [{"label": "l2", "dref": "X1"},
//!            {"label": "l2", "rel": "lawyers", "args": ["X1"]},
//!            {"label": "l1", "rel": "hire", "args": [{"pending": {"max": "l2", "min": "l3"}},
//!                                                    {"ref": "x2", "np": {"max": "l4", "min": "l5"}}]},
//!            {"label": "l6", "quant": "every", "res": "l7", "scope": "l8"},
//!            {"label": "l7", "member": "x3", "group": "X1"}]}
//! ```
//!
//! Constraint kinds are `weak`, `strict`, `identity` and `conditional`.
//! Names are assigned in first-mention order, so serializing a parsed
//! canonical document reproduces it exactly. A verb argument not yet
//! linked to an NP is `{"unlinked": true}`.

use std::collections::HashMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::render::Naming;
use crate::udrs::{
    fresh_label, fresh_referent, fresh_slot, ArgSlot, Condition, ConstraintKind, Label, Ls, Payload,
    PendingKey, QuantRel, Referent, SlotState, Sort, SubordConstraint, Udrs,
};

pub fn to_value(u: &Udrs) -> Value {
    let n = Naming::new(u);
    let key = |k: &PendingKey| json!({"max": n.l(k.max), "min": n.l(k.min)});
    let arg = |a: &ArgSlot| match a {
        ArgSlot::Direct(r) => Value::String(n.r(*r)),
        ArgSlot::Verb(id) => match u.slots.get(id) {
            Some(SlotState::Linked { np, value: None }) => json!({"pending": key(np)}),
            Some(SlotState::Linked { np, value: Some(r) }) => json!({"ref": n.r(*r), "np": key(np)}),
            _ => json!({"unlinked": true}),
        },
    };
    let subord: Vec<Value> = u
        .subord
        .iter()
        .map(|c| {
            let mut m = Map::new();
            let kind = match c.kind {
                ConstraintKind::Weak => "weak",
                ConstraintKind::Strict => "strict",
                ConstraintKind::Identity => "identity",
                ConstraintKind::Conditional => "conditional",
            };
            m.insert("kind".into(), kind.into());
            m.insert("left".into(), n.l(c.left).into());
            m.insert("right".into(), n.l(c.right).into());
            if let Some((a, b)) = c.antecedent {
                m.insert("antecedent".into(), json!([n.l(a), n.l(b)]));
            }
            Value::Object(m)
        })
        .collect();
    let conds: Vec<Value> = u
        .conds
        .iter()
        .map(|c| {
            let label = n.l(c.label);
            match &c.payload {
                Payload::ReferentIntro { dref } => json!({"label": label, "dref": n.r(*dref)}),
                Payload::Predicate { rel, args } => {
                    json!({"label": label, "rel": rel, "args": args.iter().map(arg).collect::<Vec<_>>()})
                }
                Payload::Quantifier { rel, res, scope } => {
                    json!({"label": label, "quant": rel.name(), "res": n.l(*res), "scope": n.l(*scope)})
                }
                Payload::Membership { element, group } => {
                    json!({"label": label, "member": arg(element), "group": arg(group)})
                }
            }
        })
        .collect();
    json!({
        "ls": {"max": n.l(u.ls.max), "min": n.l(u.ls.min)},
        "subord": subord,
        "conds": conds,
    })
}

/// Pretty-printed canonical JSON, newline-terminated.
pub fn serialize(u: &Udrs) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(u)).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn doc(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

#[derive(Default)]
struct Names {
    labels: HashMap<String, Label>,
    referents: HashMap<String, Referent>,
}

impl Names {
    fn label(&mut self, v: &Value) -> Result<Label> {
        let s = v.as_str().ok_or_else(|| doc(format!("label must be a string, got {v}")))?;
        if s == "l0" {
            return Ok(Label::TOP);
        }
        if !s.starts_with('l') {
            return Err(doc(format!("bad label name `{s}`")));
        }
        Ok(*self.labels.entry(s.to_string()).or_insert_with(fresh_label))
    }

    fn referent(&mut self, v: &Value) -> Result<Referent> {
        let s = v.as_str().ok_or_else(|| doc(format!("referent must be a string, got {v}")))?;
        let sort = match s.chars().next() {
            Some('x') => Sort::Individual,
            Some('X') => Sort::Group,
            _ => return Err(doc(format!("bad referent name `{s}`"))),
        };
        let r = *self.referents.entry(s.to_string()).or_insert_with(|| fresh_referent(sort));
        Ok(r)
    }

    fn key(&mut self, v: &Value) -> Result<PendingKey> {
        Ok(PendingKey::new(self.label(field(v, "max")?)?, self.label(field(v, "min")?)?))
    }

    fn arg(&mut self, v: &Value, u: &mut Udrs) -> Result<ArgSlot> {
        if v.is_string() {
            return Ok(ArgSlot::Direct(self.referent(v)?));
        }
        let state = if let Some(k) = v.get("pending") {
            SlotState::Linked { np: self.key(k)?, value: None }
        } else if let Some(r) = v.get("ref") {
            let value = Some(self.referent(r)?);
            SlotState::Linked { np: self.key(field(v, "np")?)?, value }
        } else if v.get("unlinked") == Some(&Value::Bool(true)) {
            SlotState::Open
        } else {
            return Err(doc(format!("bad argument {v}")));
        };
        let id = fresh_slot();
        u.slots.insert(id, state);
        Ok(ArgSlot::Verb(id))
    }
}

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value> {
    v.get(name).ok_or_else(|| doc(format!("missing `{name}` in {v}")))
}

fn array<'v>(v: &'v Value, name: &str) -> Result<&'v Vec<Value>> {
    field(v, name)?.as_array().ok_or_else(|| doc(format!("`{name}` must be an array")))
}

pub fn from_value(v: &Value) -> Result<Udrs> {
    let mut names = Names::default();
    let ls = field(v, "ls")?;
    let max = names.label(field(ls, "max")?)?;
    let min = names.label(field(ls, "min")?)?;
    let mut u = Udrs::new(Ls::new(max, min));
    for c in array(v, "subord")? {
        let left = names.label(field(c, "left")?)?;
        let right = names.label(field(c, "right")?)?;
        let kind = field(c, "kind")?.as_str().unwrap_or_default();
        let constraint = match kind {
            "weak" => SubordConstraint::weak(left, right),
            "strict" => SubordConstraint::strict(left, right),
            "identity" => SubordConstraint::identity(left, right),
            "conditional" => {
                let ante = array(c, "antecedent")?;
                let [a, b] = ante.as_slice() else {
                    return Err(doc("antecedent must have two labels"));
                };
                SubordConstraint::conditional((names.label(a)?, names.label(b)?), (left, right))
            }
            other => return Err(doc(format!("unknown constraint kind `{other}`"))),
        };
        u.add_constraint(constraint);
    }
    for c in array(v, "conds")? {
        let label = names.label(field(c, "label")?)?;
        let cond = if let Some(d) = c.get("dref") {
            Condition::referent(label, names.referent(d)?)
        } else if let Some(rel) = c.get("rel") {
            let rel = rel.as_str().ok_or_else(|| doc("rel must be a string"))?.to_string();
            let mut args = Vec::new();
            for a in array(c, "args")? {
                args.push(names.arg(a, &mut u)?);
            }
            Condition { label, payload: Payload::Predicate { rel, args } }
        } else if let Some(q) = c.get("quant") {
            let rel = match q.as_str() {
                Some("every") => QuantRel::Every,
                Some("dist") => QuantRel::Distribution,
                _ => return Err(doc(format!("unknown quantifier {q}"))),
            };
            let res = names.label(field(c, "res")?)?;
            let scope = names.label(field(c, "scope")?)?;
            Condition::quantifier(label, rel, res, scope)
        } else if let Some(m) = c.get("member") {
            let element = names.arg(m, &mut u)?;
            let group = names.arg(field(c, "group")?, &mut u)?;
            Condition { label, payload: Payload::Membership { element, group } }
        } else {
            return Err(doc(format!("unrecognized condition {c}")));
        };
        u.add_condition(cond);
    }
    Ok(u)
}

pub fn parse(text: &str) -> Result<Udrs> {
    let v: Value = serde_json::from_str(text).map_err(|e| doc(e.to_string()))?;
    from_value(&v)
}
