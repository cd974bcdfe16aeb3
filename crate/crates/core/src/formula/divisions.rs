//! Denominator clearing for field formulas that use the `inv` symbol.
//!
//! Every atom `s ⋈ t` whose terms contain inverses is replaced by the
//! conjunction of one guard `q ≠ 0` per inverted subterm and a division-free
//! atom obtained by cross-multiplication. Order atoms are scaled by the
//! square of the denominators so their direction is preserved.

use super::ast::{Formula, Term};
use super::FormulaError;

/// Default bound on nested `inv` applications.
pub const DEFAULT_INVERSE_DEPTH: usize = 8;

pub fn clear_divisions(f: &Formula) -> Result<Formula, FormulaError> {
    clear_divisions_bounded(f, DEFAULT_INVERSE_DEPTH)
}

pub fn clear_divisions_bounded(f: &Formula, max_depth: usize) -> Result<Formula, FormulaError> {
    Ok(match f {
        Formula::True | Formula::False => f.clone(),
        Formula::Eq(a, b) => {
            if !a.uses_function("inv") && !b.uses_function("inv") {
                return Ok(f.clone());
            }
            let mut guards = Vec::new();
            let (na, da) = fraction(a, &mut guards, 0, max_depth)?;
            let (nb, db) = fraction(b, &mut guards, 0, max_depth)?;
            guarded(guards, Formula::Eq(mul(na, db), mul(nb, da)))
        }
        Formula::Rel(r, args) => {
            if !args.iter().any(|t| t.uses_function("inv")) {
                return Ok(f.clone());
            }
            if (r != "le" && r != "lt") || args.len() != 2 {
                return Err(FormulaError::Unsupported(format!(
                    "inverse inside relation `{}`; only equalities and order atoms can be cleared",
                    r
                )));
            }
            let mut guards = Vec::new();
            let (na, da) = fraction(&args[0], &mut guards, 0, max_depth)?;
            let (nb, db) = fraction(&args[1], &mut guards, 0, max_depth)?;
            // na/da ⋈ nb/db  <=>  na·da·db² ⋈ nb·db·da²
            let lhs = mul(mul(na, da.clone()), mul(db.clone(), db.clone()));
            let rhs = mul(mul(nb, db), mul(da.clone(), da));
            guarded(guards, Formula::Rel(r.clone(), vec![lhs, rhs]))
        }
        Formula::Not(g) => Formula::not(clear_divisions_bounded(g, max_depth)?),
        Formula::And(gs) => Formula::And(gs.iter().map(|g| clear_divisions_bounded(g, max_depth)).collect::<Result<_, _>>()?),
        Formula::Or(gs) => Formula::Or(gs.iter().map(|g| clear_divisions_bounded(g, max_depth)).collect::<Result<_, _>>()?),
        Formula::Implies(a, b) => Formula::implies(
            clear_divisions_bounded(a, max_depth)?,
            clear_divisions_bounded(b, max_depth)?,
        ),
        Formula::Forall(v, g) => Formula::forall(v.clone(), clear_divisions_bounded(g, max_depth)?),
        Formula::Exists(v, g) => Formula::exists(v.clone(), clear_divisions_bounded(g, max_depth)?),
    })
}

fn guarded(guards: Vec<Term>, atom: Formula) -> Formula {
    let mut parts = Vec::new();
    for g in guards {
        let ne = Formula::not(Formula::Eq(g, Term::int(0)));
        if !parts.contains(&ne) {
            parts.push(ne);
        }
    }
    parts.push(atom);
    Formula::and(parts)
}

fn is_one(t: &Term) -> bool {
    matches!(t, Term::Num(n) if n.is_integer() && *n.numer() == 1.into())
}

fn mul(a: Term, b: Term) -> Term {
    if is_one(&a) {
        b
    } else if is_one(&b) {
        a
    } else {
        Term::app("mul", vec![a, b])
    }
}

fn one() -> Term {
    Term::int(1)
}

/// Splits a term into numerator and denominator, recording one guard per
/// inverted subterm.
fn fraction(t: &Term, guards: &mut Vec<Term>, depth: usize, max: usize) -> Result<(Term, Term), FormulaError> {
    match t {
        Term::App(f, args) => match f.as_str() {
            "inv" => {
                if depth + 1 > max {
                    return Err(FormulaError::NestingDepth { depth: depth + 1, bound: max });
                }
                let (n, d) = fraction(&args[0], guards, depth + 1, max)?;
                guards.push(n.clone());
                Ok((d, n))
            }
            "add" | "sub" => {
                let mut parts = Vec::new();
                for a in args {
                    parts.push(fraction(a, guards, depth, max)?);
                }
                let mut iter = parts.into_iter();
                let (mut n, mut d) = iter.next().unwrap();
                for (n2, d2) in iter {
                    let left = mul(n, d2.clone());
                    let right = mul(n2, d.clone());
                    n = Term::app(f, vec![left, right]);
                    d = mul(d, d2);
                }
                Ok((n, d))
            }
            "mul" => {
                let mut n = one();
                let mut d = one();
                for a in args {
                    let (n2, d2) = fraction(a, guards, depth, max)?;
                    n = mul(n, n2);
                    d = mul(d, d2);
                }
                Ok((n, d))
            }
            "neg" => {
                let (n, d) = fraction(&args[0], guards, depth, max)?;
                Ok((Term::app("neg", vec![n]), d))
            }
            _ => {
                if t.uses_function("inv") {
                    Err(FormulaError::Unsupported(format!("inverse under function `{}`", f)))
                } else {
                    Ok((t.clone(), one()))
                }
            }
        },
        _ => Ok((t.clone(), one())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, vocab};

    fn clear(s: &str) -> Formula {
        clear_divisions(&parse_formula(s, &vocab::ordered_field()).unwrap()).unwrap()
    }

    #[test]
    fn inverse_times_self() {
        let g = clear("(= (mul (inv x) x) 1)");
        assert_eq!(g, parse_formula("(and (not (= x 0)) (= x x))", &vocab::field()).unwrap());
    }

    #[test]
    fn division_by_numeral() {
        let g = clear("(= (mul x (inv 2)) 3)");
        assert_eq!(g, parse_formula("(and (not (= 2 0)) (= x (mul 3 2)))", &vocab::field()).unwrap());
    }

    #[test]
    fn nested_inverse_has_no_inverse_left() {
        let g = clear("(= (inv (inv x)) x)");
        assert!(!g.uses_function("inv"));
        let text = g.to_string();
        assert!(text.contains("(not (= x 0))"), "{}", text);
    }

    #[test]
    fn depth_bound_enforced() {
        let f = parse_formula("(= (inv (inv (inv x))) x)", &vocab::field()).unwrap();
        assert!(matches!(clear_divisions_bounded(&f, 2), Err(FormulaError::NestingDepth { .. })));
        assert!(clear_divisions_bounded(&f, 3).is_ok());
    }

    #[test]
    fn division_free_atoms_untouched() {
        let f = parse_formula("(forall ((x Elem)) (le x (mul x x)))", &vocab::ordered_field()).unwrap();
        assert_eq!(clear_divisions(&f).unwrap(), f);
    }

    #[test]
    fn inverse_in_other_relation_rejected() {
        let f = parse_formula("(Add (inv x) x 1)", &vocab::field()).unwrap();
        assert!(matches!(clear_divisions(&f), Err(FormulaError::Unsupported(_))));
    }
}
