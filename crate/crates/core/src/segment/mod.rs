//! Segment arithmetic in the rational Cartesian plane.
//!
//! Sums and products of segments are obtained by laying off representatives
//! and intersecting lines, all in exact rational arithmetic. The results are
//! then read back as lengths.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointQ {
    pub x: Rational,
    pub y: Rational,
}

impl PointQ {
    pub fn new(x: Rational, y: Rational) -> Self {
        PointQ { x, y }
    }

    pub fn origin() -> Self {
        PointQ::new(Rational::zero(), Rational::zero())
    }

    pub fn on_x_axis(x: Rational) -> Self {
        PointQ::new(x, Rational::zero())
    }

    pub fn on_y_axis(y: Rational) -> Self {
        PointQ::new(Rational::zero(), y)
    }
}

impl fmt::Display for PointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `a·x + b·y + c = 0` with `(a, b) ≠ (0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineQ {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl LineQ {
    /// The line through two distinct points.
    pub fn through(p: &PointQ, q: &PointQ) -> Option<Self> {
        if p == q {
            return None;
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = -(&a * &p.x + &b * &p.y);
        Some(LineQ { a, b, c })
    }

    pub fn parallel_through(&self, p: &PointQ) -> Self {
        let c = -(&self.a * &p.x + &self.b * &p.y);
        LineQ { a: self.a.clone(), b: self.b.clone(), c }
    }

    pub fn contains(&self, p: &PointQ) -> bool {
        (&self.a * &p.x + &self.b * &p.y + &self.c).is_zero()
    }

    pub fn is_parallel(&self, other: &LineQ) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_zero()
    }

    pub fn is_orthogonal(&self, other: &LineQ) -> bool {
        (&self.a * &other.a + &self.b * &other.b).is_zero()
    }

    /// The unique common point, or `None` for parallel or equal lines.
    pub fn meet(&self, other: &LineQ) -> Option<PointQ> {
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero() {
            return None;
        }
        let x = (&self.b * &other.c - &other.b * &self.c) / &det;
        let y = (&other.a * &self.c - &self.a * &other.c) / &det;
        Some(PointQ::new(x, y))
    }
}

pub fn sqdist(p: &PointQ, q: &PointQ) -> Rational {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// `Eq(p1, p2, q1, q2)`: the segments have the same length.
pub fn congruent(p1: &PointQ, p2: &PointQ, q1: &PointQ, q2: &PointQ) -> bool {
    sqdist(p1, p2) == sqdist(q1, q2)
}

/// Strict betweenness: `q` lies on the open segment from `p` to `r`.
pub fn between(p: &PointQ, q: &PointQ, r: &PointQ) -> bool {
    if p == q || q == r || p == r {
        return false;
    }
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&r.x - &p.x) * (&q.y - &p.y);
    let within = |a: &Rational, b: &Rational, c: &Rational| (a <= b && b <= c) || (c <= b && b <= a);
    det.is_zero() && within(&p.x, &q.x, &r.x) && within(&p.y, &q.y, &r.y)
}

/// `q` lies on the closed ray from `p` through `toward`.
fn on_ray(p: &PointQ, toward: &PointQ, q: &PointQ) -> bool {
    q == p || q == toward || between(p, q, toward) || between(p, toward, q)
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// A congruence class of segments, stored by its length. The canonical
/// representative runs from the origin along the positive x-axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegmentClass(Rational);

impl SegmentClass {
    pub fn new(len: Rational) -> Option<Self> {
        (!len.is_negative()).then_some(SegmentClass(len))
    }

    pub fn from_ratio(n: i64, d: i64) -> Option<Self> {
        (d != 0).then(|| Rational::new(BigInt::from(n), BigInt::from(d))).and_then(Self::new)
    }

    pub fn zero() -> Self {
        SegmentClass(Rational::zero())
    }

    pub fn one() -> Self {
        SegmentClass(Rational::one())
    }

    /// The class `[p, q]`, when the length is rational.
    pub fn of(p: &PointQ, q: &PointQ) -> Option<Self> {
        rational_sqrt(&sqdist(p, q)).map(SegmentClass)
    }

    pub fn length(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn representative(&self) -> (PointQ, PointQ) {
        (PointQ::origin(), PointQ::on_x_axis(self.0.clone()))
    }
}

impl fmt::Display for SegmentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Named points of a construction, in the order they were placed.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Trace {
    pub steps: Vec<(String, String)>,
}

impl Trace {
    fn put(&mut self, label: &str, p: &PointQ) {
        self.steps.push((label.to_string(), p.to_string()));
    }

    fn note(&mut self, label: &str, text: String) {
        self.steps.push((label.to_string(), text));
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, v) in &self.steps {
            writeln!(f, "  {:<4} {}", label, v)?;
        }
        Ok(())
    }
}

/// Lays off `[p, q] ≅ s` on the ray from `p` in the direction of the unit vector `u`.
fn lay_off(p: &PointQ, u: (&Rational, &Rational), s: &SegmentClass) -> PointQ {
    PointQ::new(&p.x + u.0 * s.length(), &p.y + u.1 * s.length())
}

/// `[P₁,P₂] + [P₂,P₃] = [P₁,P₃]` with `Be(P₁,P₂,P₃)`.
pub fn seg_add_traced(a: &SegmentClass, b: &SegmentClass) -> (SegmentClass, Trace) {
    let mut t = Trace::default();
    let (p1, p2) = a.representative();
    t.put("P1", &p1);
    t.put("P2", &p2);
    if a.is_zero() || b.is_zero() {
        t.note("zero", "a summand is [A0,A0]".into());
        let s = if a.is_zero() { b.clone() } else { a.clone() };
        return (s, t);
    }
    let (one, zero) = (Rational::one(), Rational::zero());
    let p3 = lay_off(&p2, (&one, &zero), b);
    t.put("P3", &p3);
    assert!(between(&p1, &p2, &p3), "P2 must lie between P1 and P3");
    let (q1, q2) = b.representative();
    assert!(congruent(&p2, &p3, &q1, &q2));
    let sum = SegmentClass::of(&p1, &p3).expect("collinear sums have rational length");
    t.note("sum", format!("[P1,P3] = {}", sum));
    (sum, t)
}

pub fn seg_add(a: &SegmentClass, b: &SegmentClass) -> SegmentClass {
    seg_add_traced(a, b).0
}

/// `a = [P₀,P₁]` on the x-axis, `1 = [P₀,P₃]` and `b = [P₀,P₄]` on the
/// orthogonal y-axis; the parallel to `P₁P₃` through `P₄` cuts the x-axis at
/// `P₂`, and `ab = [P₀,P₂]`.
pub fn seg_mul_traced(a: &SegmentClass, b: &SegmentClass) -> (SegmentClass, Trace) {
    let mut t = Trace::default();
    if a.is_zero() || b.is_zero() {
        t.note("zero", "a factor is [A0,A0]".into());
        return (SegmentClass::zero(), t);
    }
    let p0 = PointQ::origin();
    let p1 = PointQ::on_x_axis(a.length().clone());
    let p3 = PointQ::on_y_axis(Rational::one());
    let p4 = PointQ::on_y_axis(b.length().clone());
    let x_axis = LineQ::through(&p0, &p1).unwrap();
    let y_axis = LineQ::through(&p0, &p3).unwrap();
    let l13 = LineQ::through(&p1, &p3).unwrap();
    let l24 = l13.parallel_through(&p4);
    let p2 = l24.meet(&x_axis).expect("the parallel meets the x-axis");
    for (label, p) in [("P0", &p0), ("P1", &p1), ("P2", &p2), ("P3", &p3), ("P4", &p4)] {
        t.put(label, p);
    }
    assert!(on_ray(&p0, &p1, &p2) && on_ray(&p0, &p3, &p4));
    assert!(x_axis.is_orthogonal(&y_axis));
    assert!(p2 == p1 || LineQ::through(&p2, &p4).unwrap().is_parallel(&l13));
    let prod = SegmentClass::of(&p0, &p2).expect("the cut lies on the x-axis");
    t.note("prod", format!("[P0,P2] = {}", prod));
    (prod, t)
}

pub fn seg_mul(a: &SegmentClass, b: &SegmentClass) -> SegmentClass {
    seg_mul_traced(a, b).0
}

/// The configuration of [`seg_mul_traced`] with `P₂` fixed at the unit point,
/// solving for `P₄`. Defined for `a > 0`.
pub fn seg_inverse(a: &SegmentClass) -> Option<SegmentClass> {
    if a.is_zero() {
        return None;
    }
    let p0 = PointQ::origin();
    let p1 = PointQ::on_x_axis(a.length().clone());
    let p2 = PointQ::on_x_axis(Rational::one());
    let p3 = PointQ::on_y_axis(Rational::one());
    let y_axis = LineQ::through(&p0, &p3).unwrap();
    let p4 = LineQ::through(&p1, &p3).unwrap().parallel_through(&p2).meet(&y_axis)?;
    SegmentClass::of(&p0, &p4)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trichotomy {
    Equal,
    /// `a + c = b`.
    Less(SegmentClass),
    /// `a = b + d`.
    Greater(SegmentClass),
}

/// Lays both segments off on the same ray and takes the remainder between the endpoints.
pub fn seg_trichotomy(a: &SegmentClass, b: &SegmentClass) -> Trichotomy {
    let (o, pa) = a.representative();
    let (_, pb) = b.representative();
    if pa == pb {
        return Trichotomy::Equal;
    }
    let rest = SegmentClass::of(&pa, &pb).expect("endpoints on one axis");
    if pb == o || between(&o, &pb, &pa) {
        Trichotomy::Greater(rest)
    } else {
        Trichotomy::Less(rest)
    }
}

/// A formal difference `p − n` of segments.
#[derive(Debug, Clone)]
pub struct SignedSegment {
    pub pos: SegmentClass,
    pub neg: SegmentClass,
}

impl SignedSegment {
    pub fn new(pos: SegmentClass, neg: SegmentClass) -> Self {
        SignedSegment { pos, neg }
    }

    pub fn from_segment(s: SegmentClass) -> Self {
        SignedSegment::new(s, SegmentClass::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        SignedSegment::new(seg_add(&self.pos, &o.pos), seg_add(&self.neg, &o.neg))
    }

    pub fn neg(&self) -> Self {
        SignedSegment::new(self.neg.clone(), self.pos.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// `(p − n)(p′ − n′) = (pp′ + nn′) − (pn′ + np′)`.
    pub fn mul(&self, o: &Self) -> Self {
        SignedSegment::new(
            seg_add(&seg_mul(&self.pos, &o.pos), &seg_mul(&self.neg, &o.neg)),
            seg_add(&seg_mul(&self.pos, &o.neg), &seg_mul(&self.neg, &o.pos)),
        )
    }

    /// The reduced pair, with at most one nonzero side.
    pub fn normalize(&self) -> Self {
        match seg_trichotomy(&self.pos, &self.neg) {
            Trichotomy::Equal => SignedSegment::new(SegmentClass::zero(), SegmentClass::zero()),
            Trichotomy::Less(c) => SignedSegment::new(SegmentClass::zero(), c),
            Trichotomy::Greater(d) => SignedSegment::new(d, SegmentClass::zero()),
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(seg_trichotomy(&self.pos, &self.neg), Trichotomy::Greater(_))
    }

    /// The value as a rational number.
    pub fn value(&self) -> Rational {
        self.pos.length() - self.neg.length()
    }
}

impl PartialEq for SignedSegment {
    fn eq(&self, o: &Self) -> bool {
        seg_add(&self.pos, &o.neg) == seg_add(&o.pos, &self.neg)
    }
}

impl Eq for SignedSegment {}

#[cfg(test)]
mod tests;
