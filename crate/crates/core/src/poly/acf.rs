use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::convert::term_to_poly;
use super::groebner::{groebner_basis_bounded, DEFAULT_PAIR_BUDGET};
use super::multi::{MultiPoly, PolyRing};
use super::{Decision, PolyError};
use crate::formula::{classify_fragment, clear_divisions, nnf, prenex, Formula, FragmentClass, Quantifier};

pub const DNF_LIMIT: usize = 100_000;

#[derive(Debug, Clone)]
enum Node {
    True,
    False,
    Zero(MultiPoly),
    Nonzero(MultiPoly),
    And(Vec<Node>),
    Or(Vec<Node>),
}

/// One disjunct of the negated matrix: `eqs = 0`, each of `nonzero` is
/// nonzero, and each group in `some_nonzero` has a nonzero member.
#[derive(Debug, Clone, Default)]
pub struct Disjunct {
    pub eqs: Vec<MultiPoly>,
    pub nonzero: Vec<MultiPoly>,
    pub some_nonzero: Vec<Vec<MultiPoly>>,
}

fn literal(f: &Formula, positive: bool, ring: &Arc<PolyRing>) -> Result<Node, PolyError> {
    let diff = match f {
        Formula::Eq(a, b) => term_to_poly(a, ring)?.sub(&term_to_poly(b, ring)?),
        Formula::Rel(r, args) if (r == "Add" || r == "Mult") && args.len() == 3 => {
            let p: Vec<MultiPoly> = args.iter().map(|a| term_to_poly(a, ring)).collect::<Result<_, _>>()?;
            let lhs = if r == "Add" { p[0].add(&p[1]) } else { p[0].mul(&p[1]) };
            lhs.sub(&p[2])
        }
        Formula::Rel(r, _) => {
            return Err(PolyError::Fragment(format!("relation `{}` needs the ordered kernel", r)));
        }
        _ => unreachable!(),
    };
    Ok(if positive { Node::Zero(diff) } else { Node::Nonzero(diff) })
}

fn to_node(f: &Formula, ring: &Arc<PolyRing>) -> Result<Node, PolyError> {
    Ok(match f {
        Formula::True => Node::True,
        Formula::False => Node::False,
        Formula::Eq(..) | Formula::Rel(..) => literal(f, true, ring)?,
        Formula::Not(g) => match g.as_ref() {
            Formula::True => Node::False,
            Formula::False => Node::True,
            a => literal(a, false, ring)?,
        },
        Formula::And(gs) => Node::And(gs.iter().map(|g| to_node(g, ring)).collect::<Result<_, _>>()?),
        Formula::Or(gs) => Node::Or(gs.iter().map(|g| to_node(g, ring)).collect::<Result<_, _>>()?),
        _ => return Err(PolyError::Fragment("matrix is not quantifier-free".into())),
    })
}

fn flatten_or(n: &Node, out: &mut Vec<Node>) {
    match n {
        Node::Or(gs) => gs.iter().for_each(|g| flatten_or(g, out)),
        other => out.push(other.clone()),
    }
}

fn dnf(n: &Node, limit: usize) -> Result<Vec<Disjunct>, PolyError> {
    let over = || PolyError::Budget { what: "disjunctive normal form", limit };
    Ok(match n {
        Node::True => vec![Disjunct::default()],
        Node::False => vec![],
        Node::Zero(p) => vec![Disjunct { eqs: vec![p.clone()], ..Default::default() }],
        Node::Nonzero(p) => vec![Disjunct { nonzero: vec![p.clone()], ..Default::default() }],
        Node::Or(_) => {
            let mut members = Vec::new();
            flatten_or(n, &mut members);
            if members.len() > 1 && members.iter().all(|m| matches!(m, Node::Nonzero(_))) {
                let group = members.into_iter().map(|m| if let Node::Nonzero(p) = m { p } else { unreachable!() });
                return Ok(vec![Disjunct { some_nonzero: vec![group.collect()], ..Default::default() }]);
            }
            let mut out = Vec::new();
            for m in &members {
                out.extend(dnf(m, limit)?);
                if out.len() > limit {
                    return Err(over());
                }
            }
            out
        }
        Node::And(gs) => {
            let mut acc = vec![Disjunct::default()];
            for g in gs {
                let part = dnf(g, limit)?;
                if acc.len() * part.len() > limit {
                    return Err(over());
                }
                let mut next = Vec::with_capacity(acc.len() * part.len());
                for a in &acc {
                    for b in &part {
                        let mut d = a.clone();
                        d.eqs.extend(b.eqs.iter().cloned());
                        d.nonzero.extend(b.nonzero.iter().cloned());
                        d.some_nonzero.extend(b.some_nonzero.iter().cloned());
                        next.push(d);
                    }
                }
                acc = next;
            }
            acc
        }
    })
}

/// Clears constants; `None` means the disjunct is trivially unsatisfiable.
fn simplify(mut d: Disjunct) -> Option<Disjunct> {
    d.eqs.retain(|p| !p.is_zero());
    if d.eqs.iter().any(|p| p.is_constant()) {
        return None;
    }
    if d.nonzero.iter().any(|p| p.is_zero()) {
        return None;
    }
    d.nonzero.retain(|p| !p.is_constant());
    let mut groups = Vec::new();
    for mut g in d.some_nonzero {
        if g.iter().any(|p| p.is_constant() && !p.is_zero()) {
            continue;
        }
        g.retain(|p| !p.is_zero());
        match g.len() {
            0 => return None,
            1 => d.nonzero.push(g.pop().unwrap()),
            _ => groups.push(g),
        }
    }
    d.some_nonzero = groups;
    Some(d)
}

/// Eliminates variables solved by an equation `c·v + r = 0` with constant `c`.
fn eliminate_linear(mut d: Disjunct) -> Option<Disjunct> {
    loop {
        d = simplify(d)?;
        let nvars = d.eqs.first().map(|p| p.ring().vars.len()).unwrap_or(0);
        let mut found = None;
        'search: for (k, p) in d.eqs.iter().enumerate() {
            for v in 0..nvars {
                if p.degree_in(v) != 1 {
                    continue;
                }
                let coeff: Vec<_> = p.terms().iter().filter(|(m, _)| m[v] == 1).collect();
                if coeff.len() == 1 && coeff[0].0.iter().sum::<u32>() == 1 {
                    found = Some((k, v, coeff[0].1.clone()));
                    break 'search;
                }
            }
        }
        let Some((k, v, c)) = found else { return Some(d) };
        let p = d.eqs.remove(k);
        let ring = p.ring().clone();
        let vpoly = MultiPoly::var(&ring, v).scale(&c);
        let value = p.sub(&vpoly).scale(&(-BigRational::one() / c));
        let sub = |q: &MultiPoly| q.substitute(v, &value);
        d.eqs = d.eqs.iter().map(sub).collect();
        d.nonzero = d.nonzero.iter().map(sub).collect();
        d.some_nonzero = d.some_nonzero.iter().map(|g| g.iter().map(sub).collect()).collect();
    }
}

/// Decides whether the disjunct has a solution over the complex numbers.
pub fn satisfiable_over_c(d: &Disjunct, pair_budget: usize) -> Result<bool, PolyError> {
    let Some(d) = eliminate_linear(d.clone()) else { return Ok(false) };
    let Some(base) = d
        .eqs
        .first()
        .or(d.nonzero.first())
        .or(d.some_nonzero.first().and_then(|g| g.first()))
        .map(|p| p.ring().clone())
    else {
        return Ok(true);
    };
    let mut vars = base.vars.clone();
    for (i, g) in d.some_nonzero.iter().enumerate() {
        for j in 0..g.len() {
            vars.push(format!("u'{}'{}", i, j));
        }
    }
    vars.push("t'".to_string());
    let ring = PolyRing::with_order(vars, base.order);
    let mut gens: Vec<MultiPoly> = d.eqs.iter().map(|p| p.embed(&ring)).collect::<Result<_, _>>()?;
    let mut next = base.vars.len();
    for g in &d.some_nonzero {
        let mut sum = MultiPoly::int(&ring, -1);
        for q in g {
            sum = sum.add(&q.embed(&ring)?.mul(&MultiPoly::var(&ring, next)));
            next += 1;
        }
        gens.push(sum);
    }
    if !d.nonzero.is_empty() {
        let mut prod = MultiPoly::var(&ring, next);
        for q in &d.nonzero {
            prod = prod.mul(&q.embed(&ring)?);
        }
        gens.push(prod.sub(&MultiPoly::one(&ring)));
    }
    if gens.is_empty() {
        return Ok(true);
    }
    let gb = groebner_basis_bounded(&gens, pair_budget)?;
    debug_assert!(gb.verify());
    Ok(!gb.is_unit())
}

/// The disjuncts of the negated matrix of a universal sentence, over the
/// ring of its bound variables.
pub fn negated_disjuncts(s: &Formula) -> Result<(Arc<PolyRing>, Vec<Disjunct>), PolyError> {
    if !s.is_closed() {
        return Err(PolyError::Fragment("sentence has free variables".into()));
    }
    let s = clear_divisions(s).map_err(|e| PolyError::Fragment(e.to_string()))?;
    let (prefix, matrix) = prenex(&s);
    if prefix.iter().any(|(q, _)| *q != Quantifier::Forall) {
        return Err(PolyError::Fragment("sentence is not universal".into()));
    }
    let mut names: Vec<String> = Vec::new();
    for (_, v) in &prefix {
        if !names.contains(&v.name) {
            names.push(v.name.clone());
        }
    }
    let names = if names.is_empty() { vec!["x'".to_string()] } else { names };
    let ring = PolyRing::with_order(names, Default::default());
    let node = to_node(&nnf(&Formula::not(matrix)), &ring)?;
    Ok((ring, dnf(&node, DNF_LIMIT)?))
}

pub fn acf0_decide_universal(s: &Formula) -> Result<Decision, PolyError> {
    acf0_decide_universal_bounded(s, DEFAULT_PAIR_BUDGET)
}

pub fn acf0_decide_universal_bounded(s: &Formula, pair_budget: usize) -> Result<Decision, PolyError> {
    let (_, disjuncts) = negated_disjuncts(s)?;
    for d in &disjuncts {
        if satisfiable_over_c(d, pair_budget)? {
            return Ok(Decision::Invalid);
        }
    }
    Ok(Decision::Valid)
}

/// Universal sentences directly, existential ones through their universal negation.
pub fn acf0_decide(s: &Formula) -> Result<Decision, PolyError> {
    acf0_decide_bounded(s, DEFAULT_PAIR_BUDGET)
}

pub fn acf0_decide_bounded(s: &Formula, pair_budget: usize) -> Result<Decision, PolyError> {
    let s = clear_divisions(s).map_err(|e| PolyError::Fragment(e.to_string()))?;
    match classify_fragment(&s) {
        FragmentClass::Existential => Ok(match acf0_decide_universal_bounded(&nnf(&Formula::not(s)), pair_budget)? {
            Decision::Valid => Decision::Invalid,
            Decision::Invalid => Decision::Valid,
        }),
        FragmentClass::General => Err(PolyError::Fragment("sentence mixes universal and existential quantifiers".into())),
        _ => acf0_decide_universal_bounded(&s, pair_budget),
    }
}
