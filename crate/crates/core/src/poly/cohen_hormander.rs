use std::cell::Cell;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::rpoly::RPoly;
use super::{Decision, PolyError};
use crate::formula::{clear_divisions, nnf, Formula, Term};

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Zero,
    Pos,
    Neg,
    Nonzero,
}

impl Sign {
    fn of(c: &BigRational) -> Sign {
        if c.is_zero() {
            Sign::Zero
        } else if c.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    fn flip(self, yes: bool) -> Sign {
        match (self, yes) {
            (Sign::Pos, true) => Sign::Neg,
            (Sign::Neg, true) => Sign::Pos,
            (s, _) => s,
        }
    }
}

/// `p ⋈ 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Rel {
    Eq,
    Ne,
    Gt,
    Ge,
}

impl Rel {
    fn holds(self, s: Sign) -> bool {
        match self {
            Rel::Eq => s == Sign::Zero,
            Rel::Ne => s != Sign::Zero,
            Rel::Gt => s == Sign::Pos,
            Rel::Ge => s == Sign::Pos || s == Sign::Zero,
        }
    }
}

/// Quantifier-free formulas over `p ⋈ 0` atoms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Qf {
    True,
    False,
    Atom(Rel, RPoly),
    And(Vec<Qf>),
    Or(Vec<Qf>),
    Not(Box<Qf>),
}

impl Qf {
    pub fn atom(rel: Rel, p: RPoly) -> Qf {
        match p.as_constant() {
            Some(c) => {
                if rel.holds(Sign::of(c)) {
                    Qf::True
                } else {
                    Qf::False
                }
            }
            None => Qf::Atom(rel, p),
        }
    }

    pub fn and(parts: Vec<Qf>) -> Qf {
        let mut out = Vec::new();
        for p in parts {
            match p {
                Qf::True => {}
                Qf::False => return Qf::False,
                Qf::And(qs) => out.extend(qs),
                q => out.push(q),
            }
        }
        match out.len() {
            0 => Qf::True,
            1 => out.pop().unwrap(),
            _ => Qf::And(out),
        }
    }

    pub fn or(parts: Vec<Qf>) -> Qf {
        let mut out = Vec::new();
        for p in parts {
            match p {
                Qf::False => {}
                Qf::True => return Qf::True,
                Qf::Or(qs) => out.extend(qs),
                q => out.push(q),
            }
        }
        match out.len() {
            0 => Qf::False,
            1 => out.pop().unwrap(),
            _ => Qf::Or(out),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(q: Qf) -> Qf {
        match q {
            Qf::True => Qf::False,
            Qf::False => Qf::True,
            Qf::Not(inner) => *inner,
            q => Qf::Not(Box::new(q)),
        }
    }

    fn nnf(&self, positive: bool) -> Qf {
        match (self, positive) {
            (Qf::True, p) | (Qf::False, p) if !p => Qf::not(self.clone()),
            (Qf::True, _) | (Qf::False, _) => self.clone(),
            (Qf::Atom(r, p), true) => Qf::atom(*r, p.clone()),
            (Qf::Atom(r, p), false) => match r {
                Rel::Eq => Qf::atom(Rel::Ne, p.clone()),
                Rel::Ne => Qf::atom(Rel::Eq, p.clone()),
                Rel::Gt => Qf::atom(Rel::Ge, p.neg()),
                Rel::Ge => Qf::atom(Rel::Gt, p.neg()),
            },
            (Qf::And(qs), true) | (Qf::Or(qs), false) => Qf::and(qs.iter().map(|q| q.nnf(positive)).collect()),
            (Qf::Or(qs), true) | (Qf::And(qs), false) => Qf::or(qs.iter().map(|q| q.nnf(positive)).collect()),
            (Qf::Not(q), p) => q.nnf(!p),
        }
    }

    fn dnf(&self, limit: usize) -> Result<Vec<Vec<(Rel, RPoly)>>, Fail> {
        Ok(match self {
            Qf::True => vec![vec![]],
            Qf::False => vec![],
            Qf::Atom(r, p) => vec![vec![(*r, p.clone())]],
            Qf::Or(qs) => {
                let mut out = Vec::new();
                for q in qs {
                    out.extend(q.dnf(limit)?);
                    if out.len() > limit {
                        return Err(Fail::Budget);
                    }
                }
                out
            }
            Qf::And(qs) => {
                let mut acc = vec![vec![]];
                for q in qs {
                    let part = q.dnf(limit)?;
                    if acc.len() * part.len() > limit {
                        return Err(Fail::Budget);
                    }
                    let mut next = Vec::new();
                    for a in &acc {
                        for b in &part {
                            let mut c: Vec<(Rel, RPoly)> = a.clone();
                            for atom in b {
                                if !c.contains(atom) {
                                    c.push(atom.clone());
                                }
                            }
                            next.push(c);
                        }
                    }
                    acc = next;
                }
                acc
            }
            Qf::Not(_) => unreachable!("dnf expects negation normal form"),
        })
    }

    pub fn eval(&self, point: &dyn Fn(usize) -> BigRational) -> bool {
        match self {
            Qf::True => true,
            Qf::False => false,
            Qf::Atom(r, p) => r.holds(Sign::of(&p.eval(point))),
            Qf::And(qs) => qs.iter().all(|q| q.eval(point)),
            Qf::Or(qs) => qs.iter().any(|q| q.eval(point)),
            Qf::Not(q) => !q.eval(point),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Fail {
    Inconsistent,
    Budget,
}

type Sgns = Vec<(RPoly, Sign)>;
type Matrix = Vec<Vec<Sign>>;
type Res = Result<Qf, Fail>;

struct Elim {
    v: usize,
    nodes: Cell<usize>,
    budget: usize,
}

fn lookup(sgns: &Sgns, p: &RPoly) -> Option<Sign> {
    sgns.iter().find(|(q, _)| q == p).map(|(_, s)| *s)
}

impl Elim {
    fn tick(&self) -> Result<(), Fail> {
        let n = self.nodes.get() + 1;
        self.nodes.set(n);
        if n > self.budget {
            Err(Fail::Budget)
        } else {
            Ok(())
        }
    }

    fn findsign(&self, sgns: &Sgns, p: &RPoly) -> Option<Sign> {
        if let Some(c) = p.as_constant() {
            return Some(Sign::of(c));
        }
        let (q, flip) = p.monic();
        lookup(sgns, &q).map(|s| s.flip(flip))
    }

    fn assertsign(&self, sgns: &Sgns, p: &RPoly, s: Sign) -> Result<Sgns, Fail> {
        if let Some(c) = p.as_constant() {
            let actual = Sign::of(c);
            return if actual == s || (s == Sign::Nonzero && actual != Sign::Zero) {
                Ok(sgns.clone())
            } else {
                Err(Fail::Inconsistent)
            };
        }
        let (q, flip) = p.monic();
        let s1 = s.flip(flip);
        let s0 = lookup(sgns, &q).unwrap_or(s1);
        if s1 == s0 || (s0 == Sign::Nonzero && matches!(s1, Sign::Pos | Sign::Neg)) {
            let mut out: Sgns = sgns.iter().filter(|(r, _)| *r != q).cloned().collect();
            out.push((q, s1));
            Ok(out)
        } else {
            Err(Fail::Inconsistent)
        }
    }

    fn split_zero(&self, sgns: Sgns, pol: &RPoly, cz: &dyn Fn(Sgns) -> Res, cn: &dyn Fn(Sgns) -> Res) -> Res {
        match self.findsign(&sgns, pol) {
            Some(Sign::Zero) => cz(sgns),
            Some(_) => cn(sgns),
            None => {
                let z = cz(self.assertsign(&sgns, pol, Sign::Zero)?)?;
                let n = cn(self.assertsign(&sgns, pol, Sign::Nonzero)?)?;
                Ok(Qf::or(vec![
                    Qf::and(vec![Qf::atom(Rel::Eq, pol.clone()), z]),
                    Qf::and(vec![Qf::atom(Rel::Ne, pol.clone()), n]),
                ]))
            }
        }
    }

    fn split_sign(&self, sgns: Sgns, pol: &RPoly, cont: &dyn Fn(Sgns) -> Res) -> Res {
        match self.findsign(&sgns, pol) {
            Some(Sign::Nonzero) => {
                let pos = cont(self.assertsign(&sgns, pol, Sign::Pos)?)?;
                let neg = cont(self.assertsign(&sgns, pol, Sign::Neg)?)?;
                Ok(Qf::or(vec![
                    Qf::and(vec![Qf::atom(Rel::Gt, pol.clone()), pos]),
                    Qf::and(vec![Qf::atom(Rel::Gt, pol.neg()), neg]),
                ]))
            }
            _ => cont(sgns),
        }
    }

    fn split_trichotomy(&self, sgns: Sgns, pol: &RPoly, cz: &dyn Fn(Sgns) -> Res, cpn: &dyn Fn(Sgns) -> Res) -> Res {
        self.split_zero(sgns, pol, cz, &|s| self.split_sign(s, pol, cpn))
    }

    fn casesplit(&self, dun: &[RPoly], pols: &[RPoly], cont: &dyn Fn(Matrix) -> Res, sgns: Sgns) -> Res {
        self.tick()?;
        let Some((p, ops)) = pols.split_first() else {
            return self.matrix(dun, cont, sgns);
        };
        let v = self.v;
        let head = p.head(v);
        if !p.mentions(v) {
            let k = |s: Sgns| self.delconst(dun, p, ops, cont, s);
            return self.split_trichotomy(sgns, &head, &k, &k);
        }
        let cz = |s: Sgns| {
            let mut rest = vec![p.behead(v)];
            rest.extend_from_slice(ops);
            self.casesplit(dun, &rest, cont, s)
        };
        let cpn = |s: Sgns| {
            let mut d = dun.to_vec();
            d.push(p.clone());
            self.casesplit(&d, ops, cont, s)
        };
        self.split_trichotomy(sgns, &head, &cz, &cpn)
    }

    fn delconst(&self, dun: &[RPoly], p: &RPoly, ops: &[RPoly], cont: &dyn Fn(Matrix) -> Res, sgns: Sgns) -> Res {
        let s = self.findsign(&sgns, p).ok_or(Fail::Inconsistent)?;
        let at = dun.len();
        let cont2 = move |m: Matrix| {
            cont(m.into_iter()
                .map(|mut row| {
                    row.insert(at, s);
                    row
                })
                .collect())
        };
        self.casesplit(dun, ops, &cont2, sgns)
    }

    fn pdivide_pos(&self, sgns: &Sgns, p: &RPoly, q: &RPoly) -> Result<RPoly, Fail> {
        let a = q.head(self.v);
        let (k, r) = p.pseudo_remainder(q, self.v);
        match self.findsign(sgns, &a) {
            Some(Sign::Zero) | None => Err(Fail::Inconsistent),
            Some(Sign::Pos) => Ok(r),
            _ if k % 2 == 0 => Ok(r),
            Some(Sign::Neg) => Ok(r.neg()),
            Some(Sign::Nonzero) => Ok(a.mul(&r)),
        }
    }

    fn matrix(&self, pols: &[RPoly], cont: &dyn Fn(Matrix) -> Res, sgns: Sgns) -> Res {
        self.tick()?;
        if pols.is_empty() {
            return match cont(vec![vec![]]) {
                Err(Fail::Inconsistent) => Ok(Qf::False),
                r => r,
            };
        }
        let v = self.v;
        let maxdeg = pols.iter().map(|p| p.degree(v)).max().unwrap();
        let i = pols.iter().position(|p| p.degree(v) == maxdeg).unwrap();
        let p = &pols[i];
        let mut qs = vec![p.derivative(v)];
        qs.extend(pols[..i].iter().cloned());
        qs.extend(pols[i + 1..].iter().cloned());
        let gs = qs.iter().map(|q| self.pdivide_pos(&sgns, p, q)).collect::<Result<Vec<_>, _>>()?;
        let cont2 = move |m: Matrix| {
            cont(m.into_iter()
                .map(|mut row| {
                    let s = row.remove(0);
                    row.insert(i, s);
                    row
                })
                .collect())
        };
        let ded = |m: Matrix| dedmatrix(&cont2, m);
        let mut all = qs;
        all.extend(gs);
        self.casesplit(&[], &all, &ded, sgns)
    }
}

/// Removes points where nothing vanishes, merging neighbouring intervals.
fn condense(rows: Matrix) -> Matrix {
    let mut out: Matrix = Vec::with_capacity(rows.len());
    let mut it = rows.into_iter();
    let mut pending = it.next();
    while let Some(interval) = pending.take() {
        match it.next() {
            None => {
                out.push(interval);
                break;
            }
            Some(point) => {
                if point.contains(&Sign::Zero) {
                    out.push(interval);
                    out.push(point);
                }
                pending = it.next();
            }
        }
    }
    out
}

/// Deduces the signs of `p` from the matrix for `p', others, remainders`.
fn dedmatrix(cont: &dyn Fn(Matrix) -> Res, mat: Matrix) -> Res {
    let l = mat[0].len() / 2;
    let mat1: Matrix = mat
        .iter()
        .map(|row| {
            let (qd, gd) = row.split_at(l);
            let ps = qd.iter().position(|s| *s == Sign::Zero).map(|k| gd[k]).unwrap_or(Sign::Nonzero);
            let mut r = vec![ps];
            r.extend_from_slice(qd);
            r
        })
        .collect();
    let mat1 = condense(mat1);
    let left = mat1[0][1].flip(true);
    let right = mat1.last().unwrap()[1];
    let mut out: Matrix = Vec::with_capacity(mat1.len() * 2);
    let points = |k: usize| -> Sign {
        if k == 0 {
            left
        } else if k > mat1.len() {
            right
        } else {
            mat1[k - 1][0]
        }
    };
    for j in (0..mat1.len()).step_by(2) {
        let (ls, rs) = (points(j), points(j + 2));
        let rest = &mat1[j][1..];
        let row = |s: Sign| {
            let mut r = vec![s];
            r.extend_from_slice(rest);
            r
        };
        match (ls, rs) {
            (Sign::Zero, Sign::Zero) => return Err(Fail::Inconsistent),
            (Sign::Nonzero, _) | (_, Sign::Nonzero) => return Err(Fail::Inconsistent),
            (Sign::Zero, r) => out.push(row(r)),
            (l, Sign::Zero) => out.push(row(l)),
            (l, r) if l == r => out.push(row(l)),
            (l, r) => {
                out.push(row(l));
                out.push(row(Sign::Zero));
                out.push(row(r));
            }
        }
        if j + 1 < mat1.len() {
            out.push(mat1[j + 1].clone());
        }
    }
    let stripped: Matrix = out
        .into_iter()
        .map(|mut r| {
            r.remove(1);
            r
        })
        .collect();
    cont(condense(stripped))
}

impl Elim {
    /// Eliminates `∃x_v` from a quantifier-free formula.
    fn exists(&self, body: &Qf) -> Res {
        let v = self.v;
        let disjuncts = body.nnf(true).dnf(self.budget)?;
        let mut out = Vec::with_capacity(disjuncts.len());
        for conj in disjuncts {
            let (inside, outside): (Vec<_>, Vec<_>) = conj.into_iter().partition(|(_, p)| p.mentions(v));
            let mut parts: Vec<Qf> = outside.into_iter().map(|(r, p)| Qf::atom(r, p)).collect();
            if !inside.is_empty() {
                let mut pols: Vec<RPoly> = Vec::new();
                let mut atoms = Vec::new();
                for (r, p) in inside {
                    let (q, flip) = p.monic();
                    let k = match pols.iter().position(|x| *x == q) {
                        Some(k) => k,
                        None => {
                            pols.push(q);
                            pols.len() - 1
                        }
                    };
                    atoms.push((r, k, flip));
                }
                let test = |m: Matrix| -> Res {
                    let sat = m.iter().any(|row| atoms.iter().all(|(r, k, flip)| r.holds(row[*k].flip(*flip))));
                    Ok(if sat { Qf::True } else { Qf::False })
                };
                let r = match self.casesplit(&[], &pols, &test, Vec::new()) {
                    Err(Fail::Inconsistent) => Qf::False,
                    r => r?,
                };
                parts.push(r);
            }
            out.push(Qf::and(parts));
            if matches!(out.last(), Some(Qf::True)) {
                return Ok(Qf::True);
            }
        }
        Ok(Qf::or(out))
    }
}

/// Quantified formulas over polynomial atoms with indexed variables.
#[derive(Clone, Debug)]
pub enum Rf {
    Qf(Qf),
    And(Vec<Rf>),
    Or(Vec<Rf>),
    Not(Box<Rf>),
    Exists(usize, Box<Rf>),
    Forall(usize, Box<Rf>),
}

/// Eliminates all quantifiers; variables bound deeper must have smaller indices.
pub fn eliminate(f: &Rf, budget: usize) -> Result<Qf, PolyError> {
    let nodes = Cell::new(0);
    elim_rec(f, &nodes, budget).map_err(|e| match e {
        Fail::Budget => PolyError::Budget { what: "Cohen-Hörmander sign tree", limit: budget },
        Fail::Inconsistent => PolyError::Internal("inconsistent sign context at top level".into()),
    })
}

fn elim_rec(f: &Rf, nodes: &Cell<usize>, budget: usize) -> Res {
    Ok(match f {
        Rf::Qf(q) => q.clone(),
        Rf::And(fs) => Qf::and(fs.iter().map(|g| elim_rec(g, nodes, budget)).collect::<Result<_, _>>()?),
        Rf::Or(fs) => Qf::or(fs.iter().map(|g| elim_rec(g, nodes, budget)).collect::<Result<_, _>>()?),
        Rf::Not(g) => Qf::not(elim_rec(g, nodes, budget)?),
        Rf::Exists(v, g) | Rf::Forall(v, g) => {
            let forall = matches!(f, Rf::Forall(..));
            let body = elim_rec(g, nodes, budget)?;
            let body = if forall { Qf::not(body) } else { body };
            let e = Elim { v: *v, nodes: Cell::new(nodes.get()), budget };
            let r = e.exists(&body)?;
            nodes.set(e.nodes.get());
            if forall {
                Qf::not(r).nnf(true)
            } else {
                r
            }
        }
    })
}

fn depth(f: &Formula) -> usize {
    match f {
        Formula::Forall(_, g) | Formula::Exists(_, g) => 1 + depth(g),
        Formula::Not(g) => depth(g),
        Formula::Implies(a, b) => depth(a).max(depth(b)),
        Formula::And(gs) | Formula::Or(gs) => gs.iter().map(depth).max().unwrap_or(0),
        _ => 0,
    }
}

fn term_rpoly(t: &Term, env: &BTreeMap<String, usize>) -> Result<RPoly, PolyError> {
    match t {
        Term::Var(v) => env.get(&v.name).map(|i| RPoly::var(*i)).ok_or_else(|| PolyError::Unbound(v.name.clone())),
        Term::Num(n) => Ok(RPoly::C(n.clone())),
        Term::Const(c) => Err(PolyError::Fragment(format!("constant `{}` outside the field language", c))),
        Term::App(f, args) => {
            let ps = args.iter().map(|a| term_rpoly(a, env)).collect::<Result<Vec<_>, _>>()?;
            match (f.as_str(), ps.as_slice()) {
                ("add", _) => Ok(ps.iter().fold(RPoly::zero(), |a, b| a.add(b))),
                ("mul", _) => Ok(ps.iter().fold(RPoly::one(), |a, b| a.mul(b))),
                ("sub", [a, b]) => Ok(a.sub(b)),
                ("neg", [a]) => Ok(a.neg()),
                ("inv", _) => Err(PolyError::Division),
                _ => Err(PolyError::Fragment(format!("function `{}` outside the field language", f))),
            }
        }
    }
}

fn atom_rf(f: &Formula, positive: bool, env: &BTreeMap<String, usize>) -> Result<Rf, PolyError> {
    let t = |x: &Term| term_rpoly(x, env);
    let (rel, p) = match f {
        Formula::Eq(a, b) => (Rel::Eq, t(a)?.sub(&t(b)?)),
        Formula::Rel(r, args) => {
            let ps = args.iter().map(t).collect::<Result<Vec<_>, _>>()?;
            match (r.as_str(), ps.as_slice()) {
                ("le", [a, b]) => (Rel::Ge, b.sub(a)),
                ("lt", [a, b]) => (Rel::Gt, b.sub(a)),
                ("Add", [a, b, c]) => (Rel::Eq, a.add(b).sub(c)),
                ("Mult", [a, b, c]) => (Rel::Eq, a.mul(b).sub(c)),
                _ => return Err(PolyError::Fragment(format!("relation `{}` outside the field language", r))),
            }
        }
        _ => unreachable!(),
    };
    let q = match (rel, positive) {
        (r, true) => Qf::atom(r, p),
        (Rel::Eq, false) => Qf::or(vec![Qf::atom(Rel::Gt, p.clone()), Qf::atom(Rel::Gt, p.neg())]),
        (Rel::Ge, false) => Qf::atom(Rel::Gt, p.neg()),
        (Rel::Gt, false) => Qf::atom(Rel::Ge, p.neg()),
        (Rel::Ne, false) => Qf::atom(Rel::Eq, p),
    };
    Ok(Rf::Qf(q))
}

fn to_rf(f: &Formula, env: &mut BTreeMap<String, usize>, d: usize, max: usize) -> Result<Rf, PolyError> {
    Ok(match f {
        Formula::True => Rf::Qf(Qf::True),
        Formula::False => Rf::Qf(Qf::False),
        Formula::Eq(..) | Formula::Rel(..) => atom_rf(f, true, env)?,
        Formula::Not(g) => match g.as_ref() {
            a @ (Formula::Eq(..) | Formula::Rel(..)) => atom_rf(a, false, env)?,
            Formula::True => Rf::Qf(Qf::False),
            Formula::False => Rf::Qf(Qf::True),
            _ => unreachable!("input is in negation normal form"),
        },
        Formula::And(gs) => Rf::And(gs.iter().map(|g| to_rf(g, env, d, max)).collect::<Result<_, _>>()?),
        Formula::Or(gs) => Rf::Or(gs.iter().map(|g| to_rf(g, env, d, max)).collect::<Result<_, _>>()?),
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let idx = max - (d + 1);
            let old = env.insert(v.name.clone(), idx);
            let body = to_rf(g, env, d + 1, max)?;
            match old {
                Some(o) => env.insert(v.name.clone(), o),
                None => env.remove(&v.name),
            };
            if matches!(f, Formula::Forall(..)) {
                Rf::Forall(idx, Box::new(body))
            } else {
                Rf::Exists(idx, Box::new(body))
            }
        }
        Formula::Implies(..) => unreachable!("input is in negation normal form"),
    })
}

/// Converts a closed field sentence into the indexed form used by [`eliminate`].
pub fn sentence_to_rf(s: &Formula) -> Result<Rf, PolyError> {
    if !s.is_closed() {
        return Err(PolyError::Fragment("sentence has free variables".into()));
    }
    let s = clear_divisions(s).map_err(|e| PolyError::Fragment(e.to_string()))?;
    let s = nnf(&s);
    let max = depth(&s);
    to_rf(&s, &mut BTreeMap::new(), 0, max)
}

pub fn rcf_decide(s: &Formula) -> Result<Decision, PolyError> {
    rcf_decide_bounded(s, DEFAULT_NODE_BUDGET)
}

pub fn rcf_decide_bounded(s: &Formula, node_budget: usize) -> Result<Decision, PolyError> {
    let rf = sentence_to_rf(s)?;
    match eliminate(&rf, node_budget)? {
        Qf::True => Ok(Decision::Valid),
        Qf::False => Ok(Decision::Invalid),
        other => Err(PolyError::Internal(format!("elimination left a residue: {:?}", other))),
    }
}
