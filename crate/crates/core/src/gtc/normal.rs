//! Shape analysis and light rewriting of translated field sentences.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::formula::{nnf, vocab, Formula, Sort, Term, Var};
use crate::poly::{term_to_poly, MultiPoly, PolyRing};
use crate::scheme::{component_name, translate_formula, SchemeError, TranslationScheme};

/// The largest number of quantifier blocks along any path of the negation
/// normal form. A sentence of depth `k` has a prenex form with `k` blocks.
pub fn block_depth(f: &Formula) -> usize {
    fn go(f: &Formula, last: Option<bool>) -> usize {
        match f {
            Formula::And(gs) | Formula::Or(gs) => gs.iter().map(|g| go(g, last)).max().unwrap_or(0),
            Formula::Forall(_, g) | Formula::Exists(_, g) => {
                let q = matches!(f, Formula::Forall(..));
                go(g, Some(q)) + usize::from(last != Some(q))
            }
            _ => 0,
        }
    }
    go(&nnf(f), None)
}

const SPLIT_LIMIT: usize = 64;

/// Splits an NNF sentence into conjuncts by pushing `∀` through `∧` and
/// distributing `∨` over `∧` while the number of parts stays small.
pub fn split_conjuncts(f: &Formula) -> Vec<Formula> {
    match f {
        Formula::And(gs) => gs.iter().flat_map(split_conjuncts).collect(),
        Formula::Forall(v, g) => split_conjuncts(g).into_iter().map(|p| bind_forall(v, p)).collect(),
        Formula::Or(gs) => {
            let mut parts: Vec<Vec<Formula>> = vec![Vec::new()];
            for g in gs {
                let sub = split_conjuncts(g);
                if parts.len() * sub.len() > SPLIT_LIMIT {
                    return vec![f.clone()];
                }
                parts = parts
                    .iter()
                    .flat_map(|p| {
                        sub.iter().map(move |s| {
                            let mut q = p.clone();
                            q.push(s.clone());
                            q
                        })
                    })
                    .collect();
            }
            parts.into_iter().map(Formula::or).collect()
        }
        _ => vec![f.clone()],
    }
}

fn bind_forall(v: &Var, body: Formula) -> Formula {
    if body.free_variables().contains(v) {
        Formula::forall(v.clone(), body)
    } else {
        body
    }
}

fn elem() -> Sort {
    Sort::new(vocab::ELEM)
}

/// `t` when `atom` is `c·v + r = 0` with a nonzero constant `c` and `v ∉ r`.
fn solve_for(atom: &Formula, v: &Var) -> Option<Term> {
    let Formula::Eq(a, b) = atom else { return None };
    let diff = Term::app("sub", vec![a.clone(), b.clone()]);
    let mut vars = std::collections::BTreeSet::new();
    diff.collect_vars(&mut vars);
    let names: Vec<String> = vars.into_iter().map(|v| v.name).collect();
    if !names.iter().any(|n| *n == v.name) {
        return None;
    }
    let ring = PolyRing::with_order(names.clone(), Default::default());
    let p = term_to_poly(&diff, &ring).ok()?;
    let i = ring.index(&v.name)?;
    if p.degree_in(i) != 1 {
        return None;
    }
    // p = c·v + r; c is the coefficient of v, read off from p(v=1) − p(v=0)
    let r = p.substitute(i, &MultiPoly::zero(&ring));
    let c = p.substitute(i, &MultiPoly::one(&ring)).sub(&r);
    let c = c.constant_value()?;
    if c.is_zero() {
        return None;
    }
    Some(poly_to_term(&r.scale(&(-c.recip())), &ring))
}

fn poly_to_term(p: &MultiPoly, ring: &PolyRing) -> Term {
    let e = elem();
    let mut sum = Vec::new();
    for (m, c) in p.terms() {
        let mut factors = vec![Term::Num(c.clone())];
        for (i, &k) in m.iter().enumerate() {
            for _ in 0..k {
                factors.push(Term::var(&ring.vars[i], &e));
            }
        }
        sum.push(if factors.len() == 1 { factors.pop().unwrap() } else { Term::app("mul", factors) });
    }
    match sum.len() {
        0 => Term::int(0),
        1 => sum.pop().unwrap(),
        _ => Term::app("add", sum),
    }
}

/// Removes `∃v` when a top-level conjunct of its body is an equation solved
/// by `v = t`, and dually `∀v` when a top-level disjunct is `v ≠ t`.
pub fn eliminate_solved(f: &Formula) -> Formula {
    match f {
        Formula::And(gs) => Formula::and(gs.iter().map(eliminate_solved).collect()),
        Formula::Or(gs) => Formula::or(gs.iter().map(eliminate_solved).collect()),
        Formula::Exists(v, g) => {
            let g = eliminate_solved(g);
            let parts: Vec<&Formula> = match &g {
                Formula::And(gs) => gs.iter().collect(),
                other => vec![other],
            };
            match parts.iter().find_map(|a| solve_for(a, v)) {
                Some(t) => eliminate_solved(&substitute_var(&g, v, &t)),
                None => Formula::exists(v.clone(), g),
            }
        }
        Formula::Forall(v, g) => {
            let g = eliminate_solved(g);
            let parts: Vec<&Formula> = match &g {
                Formula::Or(gs) => gs.iter().collect(),
                other => vec![other],
            };
            let solved = parts.iter().find_map(|a| match a {
                Formula::Not(inner) => solve_for(inner, v),
                _ => None,
            });
            match solved {
                Some(t) => eliminate_solved(&substitute_var(&g, v, &t)),
                None => Formula::forall(v.clone(), g),
            }
        }
        _ => f.clone(),
    }
}

fn substitute_var(f: &Formula, v: &Var, t: &Term) -> Formula {
    let mut map = BTreeMap::new();
    map.insert(v.name.clone(), t.clone());
    f.substitute(&map)
}

/// Translation through an analytic scheme with every line quantifier split
/// into the normalized representatives `(1, b, c)` and `(0, 1, c)`, and the
/// first point of the leading universal block placed at the origin. Both
/// rewrites preserve truth: the analytic relations are invariant under
/// rescaling a line triple and under translations of the plane.
///
/// With `ordered`, the second leading point is moreover restricted to the
/// origin or `(1, 0)`. Over a real closed field every other point is carried
/// there by a rotation and a positive dilation, which fix the origin and
/// preserve all the analytic relations.
pub fn translate_normalized(phi: &TranslationScheme, f: &Formula, ordered: bool) -> Result<Formula, SchemeError> {
    let mut avoid = BTreeSet::new();
    let f = nnf(f).rename_bound_apart(&mut avoid);
    let mut lead = leading_points(&f).into_iter();
    let origin = lead.next();
    let unit = if ordered { lead.next() } else { None };
    let mut out = go(phi, &f, origin.as_deref(), unit.as_deref())?;
    if let (Some(_), Some(u)) = (&origin, &unit) {
        let e = Var::new(u.clone(), &Sort::new(vocab::POINT));
        out = Formula::and(vec![fix(&out, &e, &[("x", 0), ("y", 0)]), fix(&out, &e, &[("x", 1), ("y", 0)])]);
    }
    Ok(out)
}

fn leading_points(f: &Formula) -> Vec<String> {
    let mut out = Vec::new();
    let mut f = f;
    while let Formula::Forall(v, g) = f {
        if v.sort.as_str() == vocab::POINT {
            out.push(v.name.clone());
        }
        f = g;
    }
    out
}

fn comp(v: &Var, c: &str) -> Var {
    Var::new(component_name(&v.name, &Var::new(c, &elem())), &elem())
}

fn fix(body: &Formula, v: &Var, values: &[(&str, i64)]) -> Formula {
    let map = values.iter().map(|(c, k)| (comp(v, c).name, Term::int(*k))).collect();
    body.substitute(&map)
}

fn go(phi: &TranslationScheme, f: &Formula, origin: Option<&str>, unit: Option<&str>) -> Result<Formula, SchemeError> {
    Ok(match f {
        Formula::And(gs) => Formula::and(gs.iter().map(|g| go(phi, g, origin, unit)).collect::<Result<_, _>>()?),
        Formula::Or(gs) => Formula::or(gs.iter().map(|g| go(phi, g, origin, unit)).collect::<Result<_, _>>()?),
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let univ = matches!(f, Formula::Forall(..));
            let body = go(phi, g, origin, unit)?;
            let q = |vars: Vec<Var>, b: Formula| if univ { Formula::forall_many(vars, b) } else { Formula::exists_many(vars, b) };
            match v.sort.as_str() {
                vocab::POINT if univ && origin == Some(v.name.as_str()) => fix(&body, v, &[("x", 0), ("y", 0)]),
                // its two cases are taken once the whole body is translated
                vocab::POINT if univ && unit == Some(v.name.as_str()) => body,
                vocab::POINT => q(vec![comp(v, "x"), comp(v, "y")], body),
                vocab::LINE => {
                    let general = q(vec![comp(v, "b"), comp(v, "c")], fix(&body, v, &[("a", 1)]));
                    let vertical = q(vec![comp(v, "c")], fix(&body, v, &[("a", 0), ("b", 1)]));
                    if univ {
                        Formula::and(vec![general, vertical])
                    } else {
                        Formula::or(vec![general, vertical])
                    }
                }
                _ => translate_formula(phi, f)?,
            }
        }
        _ => translate_formula(phi, f)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{classify_fragment, parse_formula};
    use crate::poly::{rcf_decide, Decision};

    fn field(text: &str) -> Formula {
        parse_formula(text, &vocab::ordered_field()).unwrap()
    }

    #[test]
    fn depth_counts_blocks_along_paths() {
        let f = field("(forall ((x Elem)) (and (exists ((y Elem)) (= x y)) (forall ((z Elem)) (= z z))))");
        assert_eq!(block_depth(&f), 2);
        let g = field("(forall ((x Elem)) (exists ((y Elem)) (forall ((z Elem)) (= (mul x y) z))))");
        assert_eq!(block_depth(&g), 3);
        assert_eq!(block_depth(&field("(= 1 1)")), 0);
    }

    #[test]
    fn splitting_preserves_meaning() {
        let f = nnf(&field(
            "(forall ((x Elem)) (or (= x 0) (and (exists ((y Elem)) (= (mul x y) 1)) (forall ((z Elem)) (le 0 (mul z z))))))",
        ));
        let parts = split_conjuncts(&f);
        assert_eq!(parts.len(), 2);
        assert_eq!(block_depth(&parts[1]), 1);
        for p in &parts {
            assert_eq!(rcf_decide(p).unwrap(), Decision::Valid);
        }
    }

    #[test]
    fn solved_existentials_disappear() {
        let f = field("(forall ((a Elem)) (exists ((c Elem)) (and (= (add (mul 2 c) a) 1) (le 0 (mul c c)))))");
        let g = eliminate_solved(&nnf(&f));
        assert_eq!(block_depth(&g), 1);
        assert_eq!(rcf_decide(&g).unwrap(), Decision::Valid);
        let h = field("(exists ((c Elem)) (= (mul c c) 2))");
        assert_eq!(eliminate_solved(&h), h);
    }

    #[test]
    fn normalized_translation_agrees() {
        use crate::poly::acf0_decide;
        use crate::scheme::{scheme_pp_hilbert, scheme_pp_wu};
        let v = vocab::hilbert();
        // the flag marks sentences whose plain translation is small enough for CH
        let cases = [
            ("(forall ((A Point) (B Point)) (exists ((l Line)) (and (in A l) (in B l))))", Decision::Valid, false),
            ("(forall ((A Point) (B Point)) (= A B))", Decision::Invalid, true),
            ("(forall ((l Line) (A Point)) (or (in A l) (not (in A l))))", Decision::Valid, true),
            ("(forall ((l Line) (m Line)) (=> (Par l m) (Par m l)))", Decision::Valid, false),
            ("(forall ((A Point) (l Line)) (in A l))", Decision::Invalid, true),
            ("(forall ((A Point) (B Point) (C Point)) (=> (Be A B C) (Be C B A)))", Decision::Valid, false),
            ("(forall ((A Point) (B Point) (C Point)) (=> (Be A B C) (Be B A C)))", Decision::Invalid, false),
        ];
        for (text, expected, plain_rcf) in cases {
            let f = parse_formula(text, &v).unwrap();
            let h = scheme_pp_hilbert();
            let n = translate_normalized(&h, &f, true).unwrap();
            assert_eq!(rcf_decide(&n).unwrap(), expected, "{}", text);
            if plain_rcf {
                assert_eq!(rcf_decide(&translate_formula(&h, &f).unwrap()).unwrap(), expected, "{}", text);
            }
            if !f.relation_symbols().contains("Be") {
                let w = translate_normalized(&scheme_pp_wu(), &f, false).unwrap();
                if classify_fragment(&w).is_universal() {
                    assert_eq!(acf0_decide(&w).unwrap(), expected, "{}", text);
                }
            }
        }
    }
}
