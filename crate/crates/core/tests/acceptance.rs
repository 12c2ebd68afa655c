//! Acceptance suite: one pass/fail line per criterion.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use udrs_core::corpus::data_dir;
use udrs_core::resolver::expand_plurals;
use udrs_core::serial::serialize;
use udrs_core::{
    check_binding, check_udrs, count_readings, enumerate_readings, pl_dis, pl_dis_collective, pl_dis_distributive,
    ArgValue, ConstraintKind, DerivationNode, Drs, Error, Interpreter, Knowledge, Label, Lexicon, Payload, Reading,
    SubordConstraint, Udrs,
};

use common::{corpus, oracle, resolved_udrss, scope_bearers};

const FIXTURE: &str = "The lawyers hired a secretary.";

fn golden(name: &str) -> String {
    std::fs::read_to_string(data_dir().join("golden").join(name)).unwrap()
}

fn fixture() -> Udrs {
    let lex = Lexicon::builtin();
    let k = Knowledge::new();
    Interpreter::new(&lex, &k).interpret_first(FIXTURE).unwrap().sign.udrs
}

fn report(n: usize, name: &str, failures: &[String]) -> bool {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {n}: {name}");
    for f in failures {
        println!("       {f}");
    }
    failures.is_empty()
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn rel_label(u: &Udrs, rel: &str) -> Option<Label> {
    u.conds.iter().find_map(|c| match &c.payload {
        Payload::Predicate { rel: r, .. } if r == rel => Some(c.label),
        _ => None,
    })
}

fn has(u: &Udrs, kind: ConstraintKind, a: Label, b: Label) -> bool {
    u.subord.iter().any(|c| c.kind == kind && c.left == a && c.right == b)
}

fn fixture_plural() -> Vec<String> {
    let mut f = Vec::new();
    let start = Instant::now();
    let u = fixture();
    let text = serialize(&u);
    let elapsed = start.elapsed();
    check(&mut f, text == golden("plural.json"), "serialized form differs from plural.json");
    check(&mut f, elapsed < Duration::from_secs(1), format!("took {elapsed:?}"));

    let groups: BTreeSet<Label> = u.conds.iter().map(|c| c.label).collect();
    check(&mut f, groups.len() == 3, format!("{} condition labels", groups.len()));
    let (Some(l1), Some(l2), Some(l3)) = (rel_label(&u, "lawyers"), rel_label(&u, "secretary"), rel_label(&u, "hire"))
    else {
        f.push("missing lawyers, secretary or hire".into());
        return f;
    };
    let key = u.pending_keys();
    check(&mut f, key.len() == 1, "subject slot is not the single pending slot");
    let Some(key) = key.first() else { return f };
    let l12 = key.min;
    check(&mut f, key.max == l1, "pending slot does not point at the plural NP");
    check(&mut f, has(&u, ConstraintKind::Weak, Label::TOP, l1), "missing top >= l1");
    let l2_top = u.subord.iter().any(|c| {
        c.kind == ConstraintKind::Weak
            && c.left == Label::TOP
            && (c.right == l2 || has(&u, ConstraintKind::Identity, c.right, l2))
    });
    check(&mut f, l2_top, "missing top >= l2");
    check(&mut f, has(&u, ConstraintKind::Weak, l1, l12), "missing l1 >= l12");
    check(&mut f, has(&u, ConstraintKind::Weak, l12, l3), "missing l12 >= l3");
    let l2_verb = u.subord.iter().any(|c| {
        c.kind == ConstraintKind::Weak
            && c.right == l3
            && (c.left == l2 || has(&u, ConstraintKind::Identity, l2, c.left))
    });
    check(&mut f, l2_verb, "missing l2 >= l3");
    check(&mut f, matches!(count_readings(&u), Err(Error::UnresolvedSlot { .. })), "subject slot not pending");
    f
}

fn fixture_collective() -> Vec<String> {
    let mut f = Vec::new();
    let u = fixture();
    let key = u.pending_keys()[0];
    let c = pl_dis_collective(&u, key).unwrap();
    check(&mut f, serialize(&c) == golden("collective.json"), "serialized form differs from collective.json");
    check(&mut f, c.extends(&u), "something was removed");
    let added: Vec<_> = c.subord.difference(&u.subord).copied().collect();
    check(
        &mut f,
        added == vec![SubordConstraint::identity(key.max, key.min)],
        format!("added constraints {added:?}"),
    );
    check(&mut f, c.conds == u.conds, "conditions changed");
    let hire = c.conds.iter().find(|c| c.label == u.ls.min).unwrap();
    let group = u.referent_at(key.max).unwrap();
    if let Payload::Predicate { args, .. } = &hire.payload {
        check(&mut f, c.arg_value(&args[0]) == ArgValue::Resolved(group), "subject is not the group referent");
    }
    check(&mut f, count_readings(&c).ok() == Some(1), "collective reading count is not 1");
    f
}

fn fixture_distributive() -> Vec<String> {
    let mut f = Vec::new();
    let u = fixture();
    let key = u.pending_keys()[0];
    let d = pl_dis_distributive(&u, key).unwrap();
    check(&mut f, serialize(&d) == golden("distributive.json"), "serialized form differs from distributive.json");
    check(&mut f, d.extends(&u), "something was removed");
    let added: Vec<_> = d.subord.difference(&u.subord).copied().collect();
    let strict = added.iter().all(|c| c.kind == ConstraintKind::Strict && c.left == key.max);
    check(&mut f, added.len() == 2 && strict, format!("added constraints {added:?}"));
    let new: Vec<_> = d.conds.difference(&u.conds).cloned().collect();
    let duplex = new.iter().find_map(|c| match c.payload {
        Payload::Quantifier { res, scope, .. } if c.label == key.max && scope == key.min => Some(res),
        _ => None,
    });
    let intro = new.iter().filter(|c| matches!(c.payload, Payload::ReferentIntro { .. })).count();
    let member = new.iter().filter(|c| matches!(c.payload, Payload::Membership { .. })).count();
    check(&mut f, new.len() == 3 && duplex.is_some() && intro == 1 && member == 1, format!("added conditions {new:?}"));
    if let Some(res) = duplex {
        check(&mut f, has(&d, ConstraintKind::Strict, key.max, res), "missing max > restrictor");
        check(&mut f, has(&d, ConstraintKind::Strict, key.max, key.min), "missing max > scope");
    }
    match count_readings(&d) {
        Ok(2) => {}
        got => f.push(format!("expected 2 readings, got {got:?}")),
    }
    f
}

fn scope_counts() -> Vec<String> {
    let mut f = Vec::new();
    let lex = Lexicon::builtin();
    let k = Knowledge::from_lexicon(&lex);
    for (text, n) in [
        ("Every lawyer hired a secretary.", 2),
        ("Every lawyer believed that every clerk left.", 1),
        ("Every lawyer believed that a clerk left.", 2),
    ] {
        let u = Interpreter::new(&lex, &k).interpret_first(text).unwrap().sign.udrs;
        let got = count_readings(&u);
        check(&mut f, got.as_ref().ok() == Some(&n), format!("{text}: expected {n}, got {got:?}"));
        let o = oracle::count(&u);
        check(&mut f, o == n, format!("{text}: oracle counts {o}"));
    }
    let cases = corpus();
    let start = Instant::now();
    let mut compared = 0;
    for (text, u) in resolved_udrss(&cases) {
        if scope_bearers(&u) > 4 {
            continue;
        }
        compared += 1;
        let ours = count_readings(&u).unwrap();
        let theirs = oracle::count(&u);
        check(&mut f, ours == theirs, format!("{text}: enumerator {ours}, oracle {theirs}"));
    }
    for c in &cases {
        if let Some(n) = c.case.expanded {
            let total: BTreeSet<Drs> = expand_plurals(c.interpretation.udrs())
                .unwrap()
                .iter()
                .flat_map(|u| enumerate_readings(u).unwrap())
                .collect();
            check(&mut f, total.len() == n, format!("{}: expected {n} expanded, got {}", c.case.text, total.len()));
        }
    }
    let elapsed = start.elapsed();
    check(&mut f, compared > 0, "no corpus UDRS compared");
    check(&mut f, elapsed < Duration::from_secs(10), format!("oracle took {elapsed:?}"));
    f
}

fn daughters(n: &DerivationNode) -> Vec<&Udrs> {
    n.children().into_iter().filter_map(|c| c.sign.as_ref()).map(|s| &s.udrs).collect()
}

fn monotonicity() -> Vec<String> {
    let mut f = Vec::new();
    let cases = corpus();
    let mut nodes = 0;
    let mut applications = 0;
    for c in &cases {
        let text = &c.case.text;
        for n in c.interpretation.tree.walk() {
            if n.is_leaf() {
                continue;
            }
            nodes += 1;
            let mother = n.before_disambiguation.as_ref().unwrap_or(&n.sign.as_ref().unwrap().udrs);
            let ds = daughters(n);
            let conds: HashSet<_> = ds.iter().flat_map(|d| d.conds.iter().cloned()).collect();
            let mine: HashSet<_> = mother.conds.iter().cloned().collect();
            check(&mut f, mine == conds, format!("{text}: {} node CONDS is not the daughters' union", n.construction));
            let subord = ds.iter().flat_map(|d| d.subord.iter()).all(|s| mother.subord.contains(s));
            check(&mut f, subord, format!("{text}: {} node SUBORD drops a daughter constraint", n.construction));
            if let (Some(before), Some(after)) = (&n.before_disambiguation, &n.sign) {
                check(&mut f, after.udrs.extends(before), format!("{text}: disambiguation at {} shrank", n.construction));
            }
        }
        for step in &c.interpretation.steps {
            applications += 1;
            check(&mut f, step.output.extends(&step.input), format!("{text}: pl_dis output does not extend input"));
        }
        let u = c.interpretation.udrs();
        for key in u.pending_keys() {
            for reading in [Reading::Collective, Reading::Distributive] {
                applications += 1;
                let out = pl_dis(u, key, reading).unwrap();
                check(&mut f, out.extends(u), format!("{text}: pl_dis {reading:?} does not extend its input"));
            }
        }
    }
    check(&mut f, nodes > 0 && applications > 0, "nothing checked");
    f
}

fn semilattice_and_binding() -> Vec<String> {
    let mut f = Vec::new();
    let cases = corpus();
    for c in &cases {
        let v = check_udrs(c.interpretation.udrs());
        check(&mut f, v.is_empty(), format!("{}: {v:?}", c.case.text));
    }
    let mut readings = 0;
    for (text, u) in resolved_udrss(&cases) {
        let v = check_udrs(&u);
        check(&mut f, v.is_empty(), format!("{text} (expanded): {v:?}"));
        for d in enumerate_readings(&u).unwrap() {
            readings += 1;
            let v = check_binding(&d);
            check(&mut f, v.is_empty(), format!("{text}: unbound referents {v:?}"));
        }
    }
    check(&mut f, readings > 0, "no readings enumerated");
    f
}

fn readings_or_empty(u: &Udrs) -> Result<BTreeSet<Drs>, Error> {
    match enumerate_readings(u) {
        Ok(r) => Ok(r.into_iter().collect()),
        Err(Error::InconsistentConstraints(_)) => Ok(BTreeSet::new()),
        Err(e) => Err(e),
    }
}

fn refinement() -> Vec<String> {
    let mut f = Vec::new();
    let pool = resolved_udrss(&corpus());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut nonempty = 0;
    for trial in 0..100 {
        let (text, u) = &pool[trial % pool.len()];
        let base = readings_or_empty(u).unwrap();
        let labels: Vec<Label> = u.labels().into_iter().collect();
        let mut s = u.clone();
        for _ in 0..rng.gen_range(1..=3) {
            let a = *labels.choose(&mut rng).unwrap();
            let b = *labels.choose(&mut rng).unwrap();
            let c = match rng.gen_range(0..4) {
                0 => SubordConstraint::weak(a, b),
                1 => SubordConstraint::strict(a, b),
                2 => SubordConstraint::identity(a, b),
                _ => {
                    let p = *labels.choose(&mut rng).unwrap();
                    let q = *labels.choose(&mut rng).unwrap();
                    SubordConstraint::conditional((p, q), (a, b))
                }
            };
            s.add_constraint(c);
        }
        match readings_or_empty(&s) {
            Ok(refined) => {
                nonempty += usize::from(!refined.is_empty());
                check(&mut f, refined.is_subset(&base), format!("trial {trial} ({text}): new readings appeared"));
            }
            Err(e) => f.push(format!("trial {trial} ({text}): {e}")),
        }
    }
    check(&mut f, nonempty > 0, "every superset was unsatisfiable");
    f
}

fn main() {
    let results = [
        report(1, "golden fixture for the plural sentence", &fixture_plural()),
        report(2, "collective disambiguation of the fixture", &fixture_collective()),
        report(3, "distributive disambiguation of the fixture", &fixture_distributive()),
        report(4, "scope counts against the brute-force oracle", &scope_counts()),
        report(5, "monotonicity of construction and disambiguation", &monotonicity()),
        report(6, "semilattice and binding checks", &semilattice_and_binding()),
        report(7, "refinement under random constraint supersets", &refinement()),
    ];
    let passed = results.iter().filter(|r| **r).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
