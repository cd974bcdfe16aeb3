use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

/// Variable names and monomial order shared by a family of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: &[&str]) -> Arc<PolyRing> {
        Self::with_order(vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex)
    }

    pub fn with_order(vars: Vec<String>, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing { vars, order })
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.order {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

pub type Monomial = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// A polynomial with rational coefficients; terms sorted by decreasing monomial.
#[derive(Clone)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, BigRational)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: BigRational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((vec![0; ring.vars.len()], c));
        }
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn int(ring: &Arc<PolyRing>, n: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(n.into()))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        let mut m = vec![0; ring.vars.len()];
        m[i] = 1;
        MultiPoly { ring: ring.clone(), terms: vec![(m, BigRational::one())] }
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds from unsorted terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, BigRational)>) -> Self {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MultiPoly { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn lead(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m[i]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m[i] > 0)
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::Context)
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                self.ring.cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.iter().zip(m2).map(|(x, y)| x + y).collect(), c1 * c2));
            }
        }
        Ok(Self::from_terms(&self.ring, terms))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("same ring")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("same ring")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("same ring")
    }

    pub fn neg(&self) -> Self {
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    /// Multiplies by the monomial `m` times `k`.
    pub fn mul_term(&self, m: &[u32], k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.iter().zip(m).map(|(x, y)| x + y).collect(), c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.lead() {
            Some((_, c)) => self.scale(&(BigRational::one() / c)),
            None => self.clone(),
        }
    }

    /// Replaces variable `i` by `q`.
    pub fn substitute(&self, i: usize, q: &MultiPoly) -> Self {
        let mut acc = Self::zero(&self.ring);
        let max = self.degree_in(i) as usize;
        let mut powers = vec![Self::one(&self.ring)];
        for k in 1..=max {
            powers.push(powers[k - 1].mul(q));
        }
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest[i] as usize;
            rest[i] = 0;
            acc = acc.add(&powers[e].mul_term(&rest, c));
        }
        acc
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut sum = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(m) {
                for _ in 0..*e {
                    t *= x;
                }
            }
            sum += t;
        }
        sum
    }

    /// Moves the polynomial into another ring with a superset of the variables.
    pub fn embed(&self, ring: &Arc<PolyRing>) -> Result<Self, PolyError> {
        let map: Vec<usize> = self
            .ring
            .vars
            .iter()
            .map(|v| ring.index(v).ok_or(PolyError::Context))
            .collect::<Result<_, _>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut n = vec![0; ring.vars.len()];
                for (i, e) in m.iter().enumerate() {
                    n[map[i]] = *e;
                }
                (n, c.clone())
            })
            .collect();
        Ok(Self::from_terms(ring, terms))
    }

    /// Parses standard infix notation: `+ - * ^`, parentheses, rationals `a/b`.
    pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Self, PolyError> {
        let mut p = Parser { s: text.as_bytes(), i: 0, ring };
        let e = p.expr()?;
        p.ws();
        if p.i != p.s.len() {
            return Err(PolyError::Parse(format!("unexpected input at offset {}", p.i)));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Parse(format!("{} at offset {}", msg, self.i)))
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.product()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.i += 1;
            let t = self.product()?;
            acc = if c == b'+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.unary()?;
        while let Some(b'*') = self.peek() {
            self.i += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, PolyError> {
        if let Some(b'-') = self.peek() {
            self.i += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.i += 1;
            self.ws();
            let start = self.i;
            while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                self.i += 1;
            }
            let n: u32 = std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().or_else(|_| self.err("exponent"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i]).unwrap()
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.i += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().unwrap();
                let mut d = BigInt::one();
                if self.s.get(self.i) == Some(&b'/') && self.s.get(self.i + 1).is_some_and(|c| c.is_ascii_digit()) {
                    self.i += 1;
                    d = self.digits().parse().unwrap();
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                }
                Ok(MultiPoly::constant(self.ring, BigRational::new(n, d)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.i;
                while self.i < self.s.len()
                    && (self.s[self.i].is_ascii_alphanumeric() || matches!(self.s[self.i], b'_' | b'.' | b'\''))
                {
                    self.i += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                match self.ring.index(name) {
                    Some(k) => Ok(MultiPoly::var(self.ring, k)),
                    None => Err(PolyError::Parse(format!("unknown variable `{}`", name))),
                }
            }
            _ => self.err("expected a term"),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| if *e == 1 { self.ring.vars[i].clone() } else { format!("{}^{}", self.ring.vars[i], e) })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}
