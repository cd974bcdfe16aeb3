use std::collections::BTreeSet;

use crate::formula::vocab::{LINE, POINT};
use crate::formula::{fresh_name, Formula, Sort, Term, Var};

struct Fresh {
    avoid: BTreeSet<String>,
}

impl Fresh {
    fn var(&mut self, base: &str, sort: &str) -> Var {
        let name = fresh_name(base, &self.avoid);
        self.avoid.insert(name.clone());
        Var::new(name, &Sort::new(sort))
    }
}

fn inn(p: &Term, l: &Term) -> Formula {
    Formula::rel("in", vec![p.clone(), l.clone()])
}

/// `∃m (X ∈ m ∧ Y ∈ m ∧ Or(m, l))`: the line `XY` is orthogonal to `l`.
pub fn perpendicular_through(x: &Term, y: &Term, l: &Term, avoid: &mut BTreeSet<String>) -> Formula {
    let mut fr = Fresh { avoid: std::mem::take(avoid) };
    let f = perp(x, y, l, &mut fr);
    *avoid = fr.avoid;
    f
}

fn perp(x: &Term, y: &Term, l: &Term, fr: &mut Fresh) -> Formula {
    let m = fr.var("m", LINE);
    let mt = Term::Var(m.clone());
    Formula::exists(m, Formula::and(vec![inn(x, &mt), inn(y, &mt), Formula::rel("Or", vec![mt, l.clone()])]))
}

fn eq4(a: &Term, b: &Term, c: &Term, d: &Term) -> Formula {
    Formula::rel("Eq", vec![a.clone(), b.clone(), c.clone(), d.clone()])
}

fn expand_atom(r: &str, args: &[Term], fr: &mut Fresh) -> Option<Formula> {
    Some(match (r, args) {
        ("Par", [l1, l2]) => {
            let p = fr.var("P", POINT);
            let pt = Term::Var(p.clone());
            Formula::not(Formula::exists(p, Formula::and(vec![inn(&pt, l1), inn(&pt, l2)])))
        }
        ("SymLine", [p1, l, p2]) => {
            let q = fr.var("Q", POINT);
            let qt = Term::Var(q.clone());
            let body = vec![inn(&qt, l), perp(p1, &qt, l, fr), perp(p2, &qt, l, fr), eq4(p1, &qt, p2, &qt)];
            Formula::exists(q, Formula::and(body))
        }
        ("Peq", [l1, p, l2]) => {
            let (q1, q2) = (fr.var("Q", POINT), fr.var("Q", POINT));
            let (t1, t2) = (Term::Var(q1.clone()), Term::Var(q2.clone()));
            let body = vec![inn(&t1, l1), inn(&t2, l2), perp(p, &t1, l1, fr), perp(p, &t2, l2, fr), eq4(p, &t1, p, &t2)];
            Formula::exists_many(vec![q1, q2], Formula::and(body))
        }
        ("Leq", [p1, l, p2]) => {
            let (q1, q2) = (fr.var("Q", POINT), fr.var("Q", POINT));
            let (t1, t2) = (Term::Var(q1.clone()), Term::Var(q2.clone()));
            let body = vec![inn(&t1, l), inn(&t2, l), perp(p1, &t1, l, fr), perp(p2, &t2, l, fr), eq4(p1, &t1, p2, &t2)];
            Formula::exists_many(vec![q1, q2], Formula::and(body))
        }
        _ => return None,
    })
}

fn go(f: &Formula, fr: &mut Fresh) -> Formula {
    match f {
        Formula::Rel(r, args) => expand_atom(r, args, fr).unwrap_or_else(|| f.clone()),
        Formula::True | Formula::False | Formula::Eq(..) => f.clone(),
        Formula::Not(g) => Formula::not(go(g, fr)),
        Formula::And(gs) => Formula::And(gs.iter().map(|g| go(g, fr)).collect()),
        Formula::Or(gs) => Formula::Or(gs.iter().map(|g| go(g, fr)).collect()),
        Formula::Implies(a, b) => Formula::implies(go(a, fr), go(b, fr)),
        Formula::Forall(v, g) => Formula::forall(v.clone(), go(g, fr)),
        Formula::Exists(v, g) => Formula::exists(v.clone(), go(g, fr)),
    }
}

/// Replaces `Par`, `SymLine`, `Peq` and `Leq` by their definitions over
/// `in`, `Eq` and `Or`.
pub fn expand_defined_relations(f: &Formula) -> Formula {
    let mut fr = Fresh { avoid: f.all_variable_names() };
    go(f, &mut fr)
}
