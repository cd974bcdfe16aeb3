use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Recursive dense polynomial. `P(v, cs)` is `Σ cs[i]·x_v^i`, where the
/// coefficients only mention variables with index greater than `v`, the
/// top coefficient is nonzero and there are at least two coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RPoly {
    C(BigRational),
    P(usize, Vec<RPoly>),
}

impl RPoly {
    pub fn zero() -> RPoly {
        RPoly::C(BigRational::zero())
    }

    pub fn one() -> RPoly {
        RPoly::C(BigRational::one())
    }

    pub fn int(n: i64) -> RPoly {
        RPoly::C(BigRational::from_integer(n.into()))
    }

    pub fn var(v: usize) -> RPoly {
        RPoly::P(v, vec![RPoly::zero(), RPoly::one()])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RPoly::C(c) if c.is_zero())
    }

    pub fn as_constant(&self) -> Option<&BigRational> {
        match self {
            RPoly::C(c) => Some(c),
            _ => None,
        }
    }

    pub fn from_coeffs(v: usize, mut cs: Vec<RPoly>) -> RPoly {
        while cs.len() > 1 && cs.last().unwrap().is_zero() {
            cs.pop();
        }
        match cs.len() {
            0 => RPoly::zero(),
            1 => cs.pop().unwrap(),
            _ => RPoly::P(v, cs),
        }
    }

    /// Coefficients in `v`, lowest first.
    pub fn coeffs(&self, v: usize) -> Vec<RPoly> {
        match self {
            RPoly::P(w, cs) if *w == v => cs.clone(),
            _ => vec![self.clone()],
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        match self {
            RPoly::P(w, cs) if *w == v => cs.len() - 1,
            _ => 0,
        }
    }

    pub fn mentions(&self, v: usize) -> bool {
        match self {
            RPoly::C(_) => false,
            RPoly::P(w, cs) => *w == v || (*w < v && cs.iter().any(|c| c.mentions(v))),
        }
    }

    pub fn head(&self, v: usize) -> RPoly {
        match self {
            RPoly::P(w, cs) if *w == v => cs.last().unwrap().clone(),
            _ => self.clone(),
        }
    }

    /// Drops the leading term in `v`.
    pub fn behead(&self, v: usize) -> RPoly {
        match self {
            RPoly::P(w, cs) if *w == v => RPoly::from_coeffs(v, cs[..cs.len() - 1].to_vec()),
            _ => RPoly::zero(),
        }
    }

    pub fn add(&self, o: &RPoly) -> RPoly {
        match (self, o) {
            (RPoly::C(a), RPoly::C(b)) => RPoly::C(a + b),
            (RPoly::P(v, cs), RPoly::P(w, ds)) if v == w => {
                let n = cs.len().max(ds.len());
                let z = RPoly::zero();
                let sum = (0..n).map(|i| cs.get(i).unwrap_or(&z).add(ds.get(i).unwrap_or(&z))).collect();
                RPoly::from_coeffs(*v, sum)
            }
            (RPoly::P(v, cs), RPoly::P(w, _)) if v < w => {
                let mut cs = cs.clone();
                cs[0] = cs[0].add(o);
                RPoly::P(*v, cs)
            }
            (RPoly::P(v, cs), RPoly::C(_)) => {
                let mut cs = cs.clone();
                cs[0] = cs[0].add(o);
                RPoly::P(*v, cs)
            }
            _ => o.add(self),
        }
    }

    pub fn neg(&self) -> RPoly {
        match self {
            RPoly::C(a) => RPoly::C(-a),
            RPoly::P(v, cs) => RPoly::P(*v, cs.iter().map(|c| c.neg()).collect()),
        }
    }

    pub fn sub(&self, o: &RPoly) -> RPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &BigRational) -> RPoly {
        if k.is_zero() {
            return RPoly::zero();
        }
        match self {
            RPoly::C(a) => RPoly::C(a * k),
            RPoly::P(v, cs) => RPoly::P(*v, cs.iter().map(|c| c.scale(k)).collect()),
        }
    }

    pub fn mul(&self, o: &RPoly) -> RPoly {
        match (self, o) {
            (RPoly::C(a), _) => o.scale(a),
            (_, RPoly::C(b)) => self.scale(b),
            (RPoly::P(v, cs), RPoly::P(w, ds)) if v == w => {
                let mut out = vec![RPoly::zero(); cs.len() + ds.len() - 1];
                for (i, c) in cs.iter().enumerate() {
                    for (j, d) in ds.iter().enumerate() {
                        out[i + j] = out[i + j].add(&c.mul(d));
                    }
                }
                RPoly::from_coeffs(*v, out)
            }
            (RPoly::P(v, cs), RPoly::P(w, _)) if v < w => {
                RPoly::from_coeffs(*v, cs.iter().map(|c| c.mul(o)).collect())
            }
            _ => o.mul(self),
        }
    }

    pub fn pow(&self, n: u32) -> RPoly {
        (0..n).fold(RPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self, v: usize) -> RPoly {
        match self {
            RPoly::P(w, cs) if *w == v => RPoly::from_coeffs(
                v,
                cs.iter().enumerate().skip(1).map(|(i, c)| c.scale(&BigRational::from_integer((i as i64).into()))).collect(),
            ),
            _ => RPoly::zero(),
        }
    }

    /// The rational leading coefficient, descending through the recursion.
    pub fn head_constant(&self) -> &BigRational {
        match self {
            RPoly::C(c) => c,
            RPoly::P(_, cs) => cs.last().unwrap().head_constant(),
        }
    }

    /// Scales so the innermost leading coefficient is 1; reports a sign flip.
    pub fn monic(&self) -> (RPoly, bool) {
        let c = self.head_constant().clone();
        if c.is_zero() || c.is_one() {
            return (self.clone(), false);
        }
        (self.scale(&(BigRational::one() / &c)), c.is_negative())
    }

    /// Pseudo-division in `v`: returns `(k, r)` with `head(q)^k·p = s·q + r`.
    pub fn pseudo_remainder(&self, q: &RPoly, v: usize) -> (u32, RPoly) {
        let qs = q.coeffs(v);
        let m = qs.len() - 1;
        let a = qs[m].clone();
        let mut r = self.coeffs(v);
        let mut k = 0;
        loop {
            while r.len() > 1 && r.last().unwrap().is_zero() {
                r.pop();
            }
            if r.len() - 1 < m || (r.len() == 1 && r[0].is_zero()) {
                break;
            }
            let n = r.len() - 1;
            let b = r[n].clone();
            for c in r.iter_mut() {
                *c = c.mul(&a);
            }
            for (i, qi) in qs.iter().enumerate() {
                r[i + n - m] = r[i + n - m].sub(&b.mul(qi));
            }
            r.pop();
            k += 1;
            if r.is_empty() {
                r.push(RPoly::zero());
            }
        }
        (k, RPoly::from_coeffs(v, r))
    }

    pub fn eval(&self, point: &dyn Fn(usize) -> BigRational) -> BigRational {
        match self {
            RPoly::C(c) => c.clone(),
            RPoly::P(v, cs) => {
                let x = point(*v);
                cs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c.eval(point))
            }
        }
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RPoly::C(c) => write!(f, "{}", c),
            RPoly::P(v, cs) => {
                let mut first = true;
                for (i, c) in cs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        f.write_str(" + ")?;
                    }
                    first = false;
                    match i {
                        0 => write!(f, "{}", c)?,
                        1 => write!(f, "({})*x{}", c, v)?,
                        _ => write!(f, "({})*x{}^{}", c, v, i)?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: usize) -> RPoly {
        RPoly::var(v)
    }

    #[test]
    fn canonical_forms() {
        let p = x(0).add(&x(1)).mul(&x(0).sub(&x(1)));
        let q = x(0).pow(2).sub(&x(1).pow(2));
        assert_eq!(p, q);
        assert!(x(0).sub(&x(0)).is_zero());
        assert_eq!(x(1).add(&x(0)), x(0).add(&x(1)));
    }

    #[test]
    fn pseudo_division_identity() {
        let p = x(0).pow(3).mul(&x(1)).add(&x(0)).add(&RPoly::int(5));
        let q = x(0).mul(&x(1).add(&RPoly::one())).sub(&RPoly::int(2));
        let (k, r) = p.pseudo_remainder(&q, 0);
        assert!(r.degree(0) < q.degree(0));
        let a = q.head(0).pow(k);
        let lhs = a.mul(&p).sub(&r);
        let (k2, r2) = lhs.pseudo_remainder(&q, 0);
        assert!(r2.is_zero(), "{} {}", k2, r2);
    }

    #[test]
    fn derivative_and_monic() {
        let p = x(0).pow(3).scale(&BigRational::from_integer((-2).into())).add(&x(0));
        assert_eq!(p.derivative(0), x(0).pow(2).scale(&BigRational::from_integer((-6).into())).add(&RPoly::one()));
        let (m, flip) = p.monic();
        assert!(flip);
        assert!(m.head_constant().is_one());
    }
}
