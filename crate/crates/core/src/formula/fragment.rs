use std::collections::BTreeSet;

use serde::Serialize;

use super::ast::{Formula, Quantifier, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FragmentClass {
    QuantifierFree,
    Universal,
    Existential,
    UniversalHorn,
    General,
}

impl FragmentClass {
    /// Quantifier-free and universal-Horn sentences are universal too.
    pub fn is_universal(self) -> bool {
        matches!(self, FragmentClass::QuantifierFree | FragmentClass::Universal | FragmentClass::UniversalHorn)
    }

    pub fn is_existential(self) -> bool {
        matches!(self, FragmentClass::QuantifierFree | FragmentClass::Existential)
    }
}

/// Negation normal form: no implications, negation only on atoms.
pub fn nnf(f: &Formula) -> Formula {
    to_nnf(f, true)
}

fn to_nnf(f: &Formula, positive: bool) -> Formula {
    match f {
        Formula::True => if positive { Formula::True } else { Formula::False },
        Formula::False => if positive { Formula::False } else { Formula::True },
        Formula::Eq(..) | Formula::Rel(..) => {
            if positive {
                f.clone()
            } else {
                Formula::not(f.clone())
            }
        }
        Formula::Not(g) => to_nnf(g, !positive),
        Formula::And(gs) | Formula::Or(gs) => {
            let parts = gs.iter().map(|g| to_nnf(g, positive)).collect();
            let conj = matches!(f, Formula::And(_)) == positive;
            if conj {
                Formula::And(parts)
            } else {
                Formula::Or(parts)
            }
        }
        Formula::Implies(a, b) => {
            if positive {
                Formula::Or(vec![to_nnf(a, false), to_nnf(b, true)])
            } else {
                Formula::And(vec![to_nnf(a, true), to_nnf(b, false)])
            }
        }
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let q = if matches!(f, Formula::Forall(..)) { Quantifier::Forall } else { Quantifier::Exists };
            let q = if positive { q } else { q.dual() };
            Formula::quant(q, v.clone(), to_nnf(g, positive))
        }
    }
}

/// Prenex form of a formula: bound variables are renamed apart first, then
/// quantifiers are pulled out of the negation normal form.
pub fn prenex(f: &Formula) -> (Vec<(Quantifier, Var)>, Formula) {
    let mut avoid: BTreeSet<String> = f.free_variables().into_iter().map(|v| v.name).collect();
    let renamed = nnf(f).rename_bound_apart(&mut avoid);
    let mut prefix = Vec::new();
    let matrix = pull(&renamed, &mut prefix);
    (prefix, matrix)
}

fn pull(f: &Formula, prefix: &mut Vec<(Quantifier, Var)>) -> Formula {
    match f {
        Formula::Forall(v, g) => {
            prefix.push((Quantifier::Forall, v.clone()));
            pull(g, prefix)
        }
        Formula::Exists(v, g) => {
            prefix.push((Quantifier::Exists, v.clone()));
            pull(g, prefix)
        }
        Formula::And(gs) => Formula::And(gs.iter().map(|g| pull(g, prefix)).collect()),
        Formula::Or(gs) => Formula::Or(gs.iter().map(|g| pull(g, prefix)).collect()),
        _ => f.clone(),
    }
}

/// Number of maximal same-quantifier blocks in the prenex prefix.
pub fn quantifier_blocks(f: &Formula) -> usize {
    let (prefix, _) = prenex(f);
    let mut blocks = 0;
    let mut last = None;
    for (q, _) in prefix {
        if last != Some(q) {
            blocks += 1;
            last = Some(q);
        }
    }
    blocks
}

pub fn classify_fragment(f: &Formula) -> FragmentClass {
    let (prefix, matrix) = prenex(f);
    if prefix.is_empty() {
        return FragmentClass::QuantifierFree;
    }
    if prefix.iter().all(|(q, _)| *q == Quantifier::Forall) {
        if is_horn_matrix(&matrix) {
            FragmentClass::UniversalHorn
        } else {
            FragmentClass::Universal
        }
    } else if prefix.iter().all(|(q, _)| *q == Quantifier::Exists) {
        FragmentClass::Existential
    } else {
        FragmentClass::General
    }
}

fn flatten_and<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
    match f {
        Formula::And(gs) => gs.iter().for_each(|g| flatten_and(g, out)),
        _ => out.push(f),
    }
}

fn flatten_or<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
    match f {
        Formula::Or(gs) => gs.iter().for_each(|g| flatten_or(g, out)),
        _ => out.push(f),
    }
}

/// A conjunction of clauses each having at most one positive literal.
fn is_horn_matrix(m: &Formula) -> bool {
    let mut clauses = Vec::new();
    flatten_and(m, &mut clauses);
    clauses.iter().all(|c| {
        let mut lits = Vec::new();
        flatten_or(c, &mut lits);
        let mut positive = 0;
        for l in lits {
            match l {
                Formula::Eq(..) | Formula::Rel(..) => positive += 1,
                Formula::Not(a) if matches!(**a, Formula::Eq(..) | Formula::Rel(..)) => {}
                Formula::True | Formula::False => {}
                _ => return false,
            }
        }
        positive <= 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, vocab};

    fn class(s: &str) -> FragmentClass {
        classify_fragment(&parse_formula(s, &vocab::field()).unwrap())
    }

    #[test]
    fn commutativity_is_universal_horn() {
        let c = class("(forall ((x Elem) (y Elem)) (= (mul x y) (mul y x)))");
        assert_eq!(c, FragmentClass::UniversalHorn);
        assert!(c.is_universal());
    }

    #[test]
    fn square_root_of_two_is_existential() {
        assert_eq!(class("(exists ((x Elem)) (= (mul x x) 2))"), FragmentClass::Existential);
    }

    #[test]
    fn forall_exists_is_general() {
        assert_eq!(class("(forall ((x Elem)) (exists ((y Elem)) (= (mul y y) x)))"), FragmentClass::General);
    }

    #[test]
    fn non_horn_universal() {
        let c = class("(forall ((x Elem) (y Elem)) (=> (= (mul x y) 0) (or (= x 0) (= y 0))))");
        assert_eq!(c, FragmentClass::Universal);
    }

    #[test]
    fn existential_in_hypothesis_becomes_universal() {
        let c = class("(forall ((x Elem)) (=> (exists ((y Elem)) (= (mul y y) x)) (= x x)))");
        assert!(c.is_universal());
        let c = class("(forall ((x Elem)) (=> (forall ((y Elem)) (= (mul y y) x)) (= x x)))");
        assert_eq!(c, FragmentClass::General);
    }

    #[test]
    fn closed_quantifier_free() {
        assert_eq!(class("(= 1 1)"), FragmentClass::QuantifierFree);
    }

    #[test]
    fn blocks_counted() {
        let f = parse_formula(
            "(forall ((x Elem)) (exists ((y Elem)) (forall ((z Elem)) (= x (add y z)))))",
            &vocab::field(),
        )
        .unwrap();
        assert_eq!(quantifier_blocks(&f), 3);
    }
}
