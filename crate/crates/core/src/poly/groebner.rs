use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::multi::{divides, lcm, Monomial, MonomialOrder, MultiPoly, PolyRing};
use super::PolyError;

pub const DEFAULT_PAIR_BUDGET: usize = 100_000;

/// A reduced Gröbner basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    pub ring: Arc<PolyRing>,
    pub order: MonomialOrder,
    pub polys: Vec<MultiPoly>,
}

/// Remainder of `p` on division by `divisors` (full reduction).
pub fn normal_form(p: &MultiPoly, divisors: &[MultiPoly]) -> MultiPoly {
    let ring = p.ring().clone();
    let mut rest = p.clone();
    let mut rem: Vec<(Monomial, BigRational)> = Vec::new();
    'outer: while let Some((m, c)) = rest.lead().map(|(m, c)| (m.clone(), c.clone())) {
        for g in divisors {
            let (gm, gc) = g.lead().unwrap();
            if divides(gm, &m) {
                let q: Monomial = m.iter().zip(gm).map(|(a, b)| a - b).collect();
                rest = rest.sub(&g.mul_term(&q, &(&c / gc)));
                continue 'outer;
            }
        }
        rem.push((m.clone(), c));
        rest = rest.sub(&MultiPoly::term(&ring, m, rem.last().unwrap().1.clone()));
    }
    MultiPoly::from_terms(&ring, rem)
}

pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.lead().unwrap();
    let (gm, gc) = g.lead().unwrap();
    let l = lcm(fm, gm);
    let a: Monomial = l.iter().zip(fm).map(|(x, y)| x - y).collect();
    let b: Monomial = l.iter().zip(gm).map(|(x, y)| x - y).collect();
    f.mul_term(&a, &(BigRational::one() / fc)).sub(&g.mul_term(&b, &(BigRational::one() / gc)))
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Buchberger's algorithm with the product and chain criteria.
pub fn groebner_basis(gens: &[MultiPoly]) -> Result<GroebnerBasis, PolyError> {
    groebner_basis_bounded(gens, DEFAULT_PAIR_BUDGET)
}

pub fn groebner_basis_bounded(gens: &[MultiPoly], pair_budget: usize) -> Result<GroebnerBasis, PolyError> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Err(PolyError::Context),
    };
    if ring.vars.is_empty() && gens.iter().all(|g| g.is_zero()) {
        return Ok(GroebnerBasis { order: ring.order, ring, polys: vec![] });
    }
    if gens.iter().any(|g| *g.ring() != ring) {
        return Err(PolyError::Context);
    }
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut created = 0usize;
    let mut add = |basis: &mut Vec<MultiPoly>, pairs: &mut BTreeSet<(usize, usize)>, p: MultiPoly| -> Result<(), PolyError> {
        let k = basis.len();
        basis.push(p.monic());
        for i in 0..k {
            pairs.insert((i, k));
            created += 1;
        }
        if created > pair_budget {
            return Err(PolyError::Budget { what: "Gröbner pair queue", limit: pair_budget });
        }
        Ok(())
    };
    for g in gens {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r)?;
        }
    }
    while let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
        let la = lcm(basis[a.0].lead().unwrap().0, basis[a.1].lead().unwrap().0);
        let lb = lcm(basis[b.0].lead().unwrap().0, basis[b.1].lead().unwrap().0);
        ring.cmp(&la, &lb).then(a.cmp(b))
    }) {
        pairs.remove(&(i, j));
        let (mi, mj) = (basis[i].lead().unwrap().0.clone(), basis[j].lead().unwrap().0.clone());
        if coprime(&mi, &mj) {
            continue;
        }
        let l = lcm(&mi, &mj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lead().unwrap().0, &l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r)?;
        }
    }
    Ok(GroebnerBasis { order: ring.order, polys: reduce_basis(basis), ring })
}

fn reduce_basis(mut basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let mut minimal: Vec<MultiPoly> = Vec::new();
    basis.sort_by(|a, b| a.ring().cmp(a.lead().unwrap().0, b.lead().unwrap().0));
    for g in basis {
        if !minimal.iter().any(|h| divides(h.lead().unwrap().0, g.lead().unwrap().0)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<MultiPoly> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
        let g = &minimal[k];
        let (m, c) = g.lead().unwrap();
        let tail = g.sub(&MultiPoly::term(g.ring(), m.clone(), c.clone()));
        let r = MultiPoly::term(g.ring(), m.clone(), c.clone()).add(&normal_form(&tail, &others));
        out.push(r.monic());
    }
    out
}

impl GroebnerBasis {
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        normal_form(p, &self.polys)
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        let n = self.polys.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.reduce(&s_polynomial(&self.polys[i], &self.polys[j])).is_zero()))
            && self.polys.iter().all(|g| !g.is_zero() && g.lead().unwrap().1.is_one())
    }
}

pub fn ideal_membership(p: &MultiPoly, gb: &GroebnerBasis) -> bool {
    gb.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y", "z"])
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &ring()).unwrap()
    }

    #[test]
    fn membership_witness() {
        let (f, g) = (p("x^2 - 1"), p("x*y - 1"));
        let combo = p("x").mul(&g).sub(&p("y").mul(&f));
        assert_eq!(combo, p("y - x"));
        let gb = groebner_basis(&[f, g]).unwrap();
        assert!(gb.verify());
        assert!(ideal_membership(&p("y - x"), &gb));
        assert!(!ideal_membership(&p("y"), &gb));
    }

    #[test]
    fn small_bases() {
        let gb = groebner_basis(&[p("x")]).unwrap();
        assert_eq!(gb.polys, vec![p("x")]);
        assert!(!ideal_membership(&p("1"), &gb));
        assert!(ideal_membership(&p("x^2"), &gb));
        let gb = groebner_basis(&[p("x^2 + 1"), p("x^2 - 1")]).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.polys, vec![p("1")]);
    }

    #[test]
    fn lex_elimination() {
        let r = PolyRing::with_order(vec!["x".into(), "y".into()], MonomialOrder::Lex);
        let q = |s: &str| MultiPoly::parse(s, &r).unwrap();
        let gb = groebner_basis(&[q("x^2 + y^2 - 1"), q("x - y")]).unwrap();
        assert!(gb.verify());
        assert!(gb.polys.contains(&q("y^2 - 1/2")));
    }

    #[test]
    fn budget_reported() {
        let gens = [p("x^3 - y*z"), p("y^3 - x*z"), p("z^3 - x*y")];
        assert!(matches!(groebner_basis_bounded(&gens, 2), Err(PolyError::Budget { .. })));
        assert!(groebner_basis(&gens).unwrap().verify());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -3i64..4), 1..4).prop_map(|ts| {
            let r = ring();
            MultiPoly::from_terms(
                &r,
                ts.into_iter().map(|((a, b, c), k)| (vec![a, b, c], BigRational::from_integer(k.into()))).collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn bases_are_groebner(gens in prop::collection::vec(arb_poly(), 1..4)) {
            let gb = groebner_basis(&gens).unwrap();
            prop_assert!(gb.verify());
            for g in &gens {
                prop_assert!(gb.contains(g));
            }
        }
    }
}
