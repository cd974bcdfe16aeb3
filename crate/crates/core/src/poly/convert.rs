use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::multi::{MultiPoly, PolyRing};
use super::PolyError;
use crate::formula::{Formula, Term};

/// Converts a division-free field term into a polynomial over `ring`.
pub fn term_to_poly(t: &Term, ring: &Arc<PolyRing>) -> Result<MultiPoly, PolyError> {
    match t {
        Term::Var(v) => ring
            .index(&v.name)
            .map(|i| MultiPoly::var(ring, i))
            .ok_or_else(|| PolyError::Unbound(v.name.clone())),
        Term::Num(n) => Ok(MultiPoly::constant(ring, n.clone())),
        Term::Const(c) => Err(PolyError::Fragment(format!("constant `{}` outside the field language", c))),
        Term::App(f, args) => {
            let ps = args.iter().map(|a| term_to_poly(a, ring)).collect::<Result<Vec<_>, _>>()?;
            match (f.as_str(), ps.as_slice()) {
                ("add", _) => Ok(ps.iter().fold(MultiPoly::zero(ring), |a, b| a.add(b))),
                ("mul", _) => Ok(ps.iter().fold(MultiPoly::one(ring), |a, b| a.mul(b))),
                ("sub", [a, b]) => Ok(a.sub(b)),
                ("neg", [a]) => Ok(a.neg()),
                ("inv", _) => Err(PolyError::Division),
                _ => Err(PolyError::Fragment(format!("function `{}` outside the field language", f))),
            }
        }
    }
}

pub fn eval_term_rational(t: &Term, env: &BTreeMap<String, BigRational>) -> Result<BigRational, PolyError> {
    match t {
        Term::Var(v) => env.get(&v.name).cloned().ok_or_else(|| PolyError::Unbound(v.name.clone())),
        Term::Num(n) => Ok(n.clone()),
        Term::Const(c) => Err(PolyError::Fragment(format!("constant `{}` outside the field language", c))),
        Term::App(f, args) => {
            let vs = args.iter().map(|a| eval_term_rational(a, env)).collect::<Result<Vec<_>, _>>()?;
            match (f.as_str(), vs.as_slice()) {
                ("add", _) => Ok(vs.iter().fold(BigRational::zero(), |a, b| a + b)),
                ("mul", _) => Ok(vs.iter().fold(BigRational::one(), |a, b| a * b)),
                ("sub", [a, b]) => Ok(a - b),
                ("neg", [a]) => Ok(-a),
                ("inv", [a]) => Ok(if a.is_zero() { BigRational::zero() } else { BigRational::one() / a }),
                _ => Err(PolyError::Fragment(format!("function `{}` outside the field language", f))),
            }
        }
    }
}

/// Truth of a quantifier-free field formula at a rational point.
pub fn eval_qf_rational(f: &Formula, env: &BTreeMap<String, BigRational>) -> Result<bool, PolyError> {
    let t = |x: &Term| eval_term_rational(x, env);
    Ok(match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Eq(a, b) => t(a)? == t(b)?,
        Formula::Rel(r, args) => {
            let v = args.iter().map(t).collect::<Result<Vec<_>, _>>()?;
            match (r.as_str(), v.as_slice()) {
                ("le", [a, b]) => a <= b,
                ("lt", [a, b]) => a < b,
                ("Add", [a, b, c]) => a + b == *c,
                ("Mult", [a, b, c]) => a * b == *c,
                _ => return Err(PolyError::Fragment(format!("relation `{}` outside the field language", r))),
            }
        }
        Formula::Not(g) => !eval_qf_rational(g, env)?,
        Formula::And(gs) => {
            for g in gs {
                if !eval_qf_rational(g, env)? {
                    return Ok(false);
                }
            }
            true
        }
        Formula::Or(gs) => {
            for g in gs {
                if eval_qf_rational(g, env)? {
                    return Ok(true);
                }
            }
            false
        }
        Formula::Implies(a, b) => !eval_qf_rational(a, env)? || eval_qf_rational(b, env)?,
        Formula::Forall(..) | Formula::Exists(..) => {
            return Err(PolyError::Fragment("quantifier in a rational evaluation".into()))
        }
    })
}

pub fn eval_closed_rational(f: &Formula) -> Result<bool, PolyError> {
    eval_qf_rational(f, &BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_term, vocab, Var};

    #[test]
    fn terms_become_polynomials() {
        let v = vocab::field();
        let e = crate::formula::Sort::new(vocab::ELEM);
        let free = [Var::new("x", &e), Var::new("y", &e)];
        let t = parse_term("(sub (mul x x (add y 1)) (neg 2))", &v, &free).unwrap();
        let ring = PolyRing::new(&["x", "y"]);
        assert_eq!(term_to_poly(&t, &ring).unwrap(), MultiPoly::parse("x^2*y + x^2 + 2", &ring).unwrap());
        let bad = parse_term("(inv x)", &v, &free).unwrap();
        assert_eq!(term_to_poly(&bad, &ring), Err(PolyError::Division));
    }

    #[test]
    fn closed_evaluation() {
        let v = vocab::ordered_field();
        let f = parse_formula("(and (lt 1/2 1) (= (mul 2 (inv 4)) 1/2) (Add 1 2 3) (not (Mult 2 2 5)))", &v).unwrap();
        assert!(eval_closed_rational(&f).unwrap());
        let g = parse_formula("(le 3 (neg 1))", &v).unwrap();
        assert!(!eval_closed_rational(&g).unwrap());
    }
}
