//! Coordinatizing finite affine planes through planar ternary rings.
//!
//! Every step of the extraction is a construction in the plane: parallels,
//! joins and meets found by search, with uniqueness checked on the way.

mod iso;

use serde::Serialize;
use thiserror::Error;

use crate::formula::vocab;
use crate::scheme::{scheme_pp_in, transduce, SchemeError};
use crate::structure::{field_from_tables, FieldAxiomViolation, FiniteStructure, StructureError};

pub use iso::{field_isomorphism, plane_isomorphism};

#[derive(Debug, Error)]
pub enum PtrError {
    #[error("not an affine plane: {0}")]
    NotAffine(String),
    #[error("invalid frame: {0}")]
    Frame(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("derived tables are not a field: `{}` fails at {:?}", .0.axiom, .0.witness)]
    NotAField(FieldAxiomViolation),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// Incidence data of a finite plane, indexed both ways.
#[derive(Debug, Clone)]
pub struct Plane {
    points_on: Vec<Vec<u32>>,
    lines_through: Vec<Vec<u32>>,
    incident: Vec<bool>,
    names: Vec<String>,
}

impl Plane {
    /// Reads the `in` relation of an incidence structure and checks that it
    /// is an affine plane: unique joins, unique parallels, three noncollinear points.
    pub fn from_structure(s: &FiniteStructure) -> Result<Self, PtrError> {
        let np = s.carrier_size(vocab::POINT);
        let nl = s.carrier_size(vocab::LINE);
        let rel = s.relation("in").ok_or_else(|| PtrError::NotAffine("no incidence relation".into()))?;
        let mut points_on = vec![Vec::new(); nl];
        let mut lines_through = vec![Vec::new(); np];
        let mut incident = vec![false; np * nl];
        for t in rel.tuples() {
            points_on[t[1] as usize].push(t[0]);
            lines_through[t[0] as usize].push(t[1]);
            incident[t[0] as usize * nl + t[1] as usize] = true;
        }
        for v in points_on.iter_mut().chain(lines_through.iter_mut()) {
            v.sort_unstable();
        }
        let names = (0..np as u32).map(|p| s.name_of(vocab::POINT, p)).collect();
        let plane = Plane { points_on, lines_through, incident, names };
        plane.check_affine()?;
        Ok(plane)
    }

    fn check_affine(&self) -> Result<(), PtrError> {
        let np = self.num_points() as u32;
        let nl = self.num_lines() as u32;
        for l in 0..nl {
            if self.points_on(l).len() < 2 {
                return Err(PtrError::NotAffine(format!("line {} has fewer than two points", l)));
            }
        }
        for p in 0..np {
            for q in p + 1..np {
                let common = self.lines_through(p).iter().filter(|&&l| self.on(q, l)).count();
                if common != 1 {
                    return Err(PtrError::NotAffine(format!("points {} and {} lie on {} common lines", p, q, common)));
                }
            }
        }
        if !(0..nl).any(|l| self.points_on(l).len() < np as usize) {
            return Err(PtrError::NotAffine("all points are collinear".into()));
        }
        for l in 0..nl {
            for p in 0..np {
                if !self.on(p, l) {
                    let n = self.lines_through(p).iter().filter(|&&m| self.disjoint(l, m)).count();
                    if n != 1 {
                        return Err(PtrError::NotAffine(format!("{} parallels to line {} through point {}", n, l, p)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn num_points(&self) -> usize {
        self.lines_through.len()
    }

    pub fn num_lines(&self) -> usize {
        self.points_on.len()
    }

    pub fn on(&self, p: u32, l: u32) -> bool {
        self.incident[p as usize * self.num_lines() + l as usize]
    }

    pub fn points_on(&self, l: u32) -> &[u32] {
        &self.points_on[l as usize]
    }

    pub fn lines_through(&self, p: u32) -> &[u32] {
        &self.lines_through[p as usize]
    }

    pub fn point_name(&self, p: u32) -> &str {
        &self.names[p as usize]
    }

    fn disjoint(&self, l: u32, m: u32) -> bool {
        l != m && !self.points_on(l).iter().any(|&p| self.on(p, m))
    }

    /// Parallel in the wide sense: equal or disjoint.
    pub fn parallel(&self, l: u32, m: u32) -> bool {
        l == m || self.disjoint(l, m)
    }

    /// The unique point on both lines.
    pub fn meet(&self, l: u32, m: u32) -> Result<u32, PtrError> {
        let mut it = self.points_on(l).iter().filter(|&&p| self.on(p, m));
        match (it.next(), it.next()) {
            (Some(&p), None) => Ok(p),
            (None, _) => Err(PtrError::Construction(format!("lines {} and {} do not meet", l, m))),
            _ => Err(PtrError::Construction(format!("lines {} and {} share several points", l, m))),
        }
    }

    /// The unique line through two distinct points.
    pub fn join(&self, p: u32, q: u32) -> Result<u32, PtrError> {
        let mut it = self.lines_through(p).iter().filter(|&&l| self.on(q, l));
        match (it.next(), it.next()) {
            (Some(&l), None) if p != q => Ok(l),
            _ => Err(PtrError::Construction(format!("no unique line through points {} and {}", p, q))),
        }
    }

    /// The unique line through `p` parallel to `l`.
    pub fn parallel_through(&self, p: u32, l: u32) -> Result<u32, PtrError> {
        let mut it = self.lines_through(p).iter().filter(|&&m| self.parallel(l, m));
        match (it.next(), it.next()) {
            (Some(&m), None) => Ok(m),
            _ => Err(PtrError::Construction(format!("no unique parallel to line {} through point {}", l, p))),
        }
    }
}

/// Two axes, the unit diagonal, the origin and the unit point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoordinateFrame {
    pub l0: u32,
    pub m0: u32,
    pub delta: u32,
    pub origin: u32,
    pub unit: u32,
}

/// Frame components fixed by the caller; the rest is chosen.
#[derive(Debug, Clone, Copy, Default)]
pub struct FrameOverrides {
    pub l0: Option<u32>,
    pub m0: Option<u32>,
    pub delta: Option<u32>,
    pub unit: Option<u32>,
}

impl CoordinateFrame {
    pub fn validate(&self, plane: &Plane) -> Result<(), PtrError> {
        let nl = plane.num_lines() as u32;
        let f = |m: String| Err(PtrError::Frame(m));
        if [self.l0, self.m0, self.delta].iter().any(|&l| l >= nl) || self.unit as usize >= plane.num_points() {
            return f("id out of range".into());
        }
        if self.l0 == self.m0 || self.delta == self.l0 || self.delta == self.m0 {
            return f("the three frame lines must be distinct".into());
        }
        match plane.meet(self.l0, self.m0) {
            Ok(o) if o == self.origin => {}
            _ => return f("origin is not the meet of the axes".into()),
        }
        if !plane.on(self.origin, self.delta) {
            return f("the diagonal must pass through the origin".into());
        }
        if !plane.on(self.unit, self.l0) || self.unit == self.origin {
            return f("the unit point must lie on the first axis and differ from the origin".into());
        }
        Ok(())
    }
}

/// The lexicographically first valid frame `(ℓ₀, m₀, δ, I)` agreeing with the overrides.
pub fn choose_frame(plane: &Plane, overrides: FrameOverrides) -> Result<CoordinateFrame, PtrError> {
    if let (Some(l), Some(d)) = (overrides.l0, overrides.delta) {
        if l == d {
            return Err(PtrError::Frame("the diagonal must differ from the first axis".into()));
        }
    }
    if let (Some(m), Some(d)) = (overrides.m0, overrides.delta) {
        if m == d {
            return Err(PtrError::Frame("the diagonal must differ from the second axis".into()));
        }
    }
    let nl = plane.num_lines() as u32;
    let pick = |o: Option<u32>| -> Vec<u32> { o.map_or_else(|| (0..nl).collect(), |v| vec![v]) };
    for l0 in pick(overrides.l0) {
        for m0 in pick(overrides.m0) {
            let Ok(origin) = plane.meet(l0, m0) else { continue };
            if l0 == m0 {
                continue;
            }
            let deltas: Vec<u32> = match overrides.delta {
                Some(d) => vec![d],
                None => plane.lines_through(origin).to_vec(),
            };
            for delta in deltas {
                let units: Vec<u32> = match overrides.unit {
                    Some(u) => vec![u],
                    None => plane.points_on(l0).to_vec(),
                };
                for unit in units {
                    let f = CoordinateFrame { l0, m0, delta, origin, unit };
                    if f.validate(plane).is_ok() {
                        return Ok(f);
                    }
                }
            }
        }
    }
    Err(PtrError::Frame("no valid frame".into()))
}

/// Slope of a line: an element of `K`, or vertical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Slope {
    Finite(u32),
    Infinite,
}

/// A planar ternary ring on `K = {0..k}`, with the coordinatization it came from.
#[derive(Debug, Clone, Serialize)]
pub struct Ptr {
    /// Point id of each element of `K`, when extracted from a plane.
    pub carrier: Vec<u32>,
    pub names: Vec<String>,
    pub zero: u32,
    pub one: u32,
    /// `T(a, x, b)` at `(a·k + x)·k + b`.
    pub ternary: Vec<u32>,
    /// `add(a, b) = T(a, 1, b)`.
    pub add: Vec<u32>,
    /// `mul(a, x) = T(a, x, 0)`.
    pub mul: Vec<u32>,
    pub frame: Option<CoordinateFrame>,
    /// Coordinates of every plane point.
    pub coords: Vec<(u32, u32)>,
    pub slopes: Vec<Slope>,
}

impl Ptr {
    /// Wraps a raw ternary table, deriving addition and multiplication.
    pub fn from_table(k: usize, zero: u32, one: u32, ternary: Vec<u32>) -> Result<Self, PtrError> {
        if ternary.len() != k * k * k || ternary.iter().any(|&v| v as usize >= k) || zero as usize >= k || one as usize >= k {
            return Err(PtrError::Construction("ternary table must be total over K".into()));
        }
        let mut p = Ptr {
            carrier: (0..k as u32).collect(),
            names: (0..k).map(|i| i.to_string()).collect(),
            zero,
            one,
            ternary,
            add: Vec::new(),
            mul: Vec::new(),
            frame: None,
            coords: Vec::new(),
            slopes: Vec::new(),
        };
        p.derive_operations();
        Ok(p)
    }

    fn derive_operations(&mut self) {
        let k = self.size() as u32;
        self.add = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).map(|(a, b)| self.t(a, self.one, b)).collect();
        self.mul = (0..k).flat_map(|a| (0..k).map(move |x| (a, x))).map(|(a, x)| self.t(a, x, self.zero)).collect();
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn t(&self, a: u32, x: u32, b: u32) -> u32 {
        let k = self.size();
        self.ternary[(a as usize * k + x as usize) * k + b as usize]
    }

    pub fn set_t(&mut self, a: u32, x: u32, b: u32, y: u32) {
        let k = self.size();
        self.ternary[(a as usize * k + x as usize) * k + b as usize] = y;
        self.derive_operations();
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.size() + b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.size() + b as usize]
    }

    /// A pair with `ab ≠ ba`, if multiplication is not commutative.
    pub fn noncommuting_pair(&self) -> Option<(u32, u32)> {
        let k = self.size() as u32;
        (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }
}

/// Reads off `K`, coordinates, slopes and the ternary operation.
pub fn extract_ptr(plane: &Plane, frame: CoordinateFrame) -> Result<Ptr, PtrError> {
    frame.validate(plane)?;
    let CoordinateFrame { l0, m0, delta, origin, unit } = frame;
    let carrier: Vec<u32> = plane.points_on(l0).to_vec();
    let k = carrier.len();
    let index_of = |p: u32| -> Result<u32, PtrError> {
        carrier
            .binary_search(&p)
            .map(|i| i as u32)
            .map_err(|_| PtrError::Construction(format!("point {} is not on the first axis", p)))
    };
    // f_δ⁻¹ : m₀ → ℓ₀, along the horizontal to δ and then the vertical down
    let from_m0 = |y: u32| -> Result<u32, PtrError> {
        let z = plane.meet(plane.parallel_through(y, l0)?, delta)?;
        plane.meet(plane.parallel_through(z, m0)?, l0)
    };
    let mut coords = Vec::with_capacity(plane.num_points());
    let mut at = vec![u32::MAX; k * k];
    for p in 0..plane.num_points() as u32 {
        let x = index_of(plane.meet(plane.parallel_through(p, m0)?, l0)?)?;
        let y = index_of(from_m0(plane.meet(plane.parallel_through(p, l0)?, m0)?)?)?;
        let cell = &mut at[x as usize * k + y as usize];
        if *cell != u32::MAX {
            return Err(PtrError::Construction(format!("points {} and {} share coordinates", *cell, p)));
        }
        *cell = p;
        coords.push((x, y));
    }
    if at.contains(&u32::MAX) {
        return Err(PtrError::Construction("coordinates do not cover K²".into()));
    }
    let point_at = |x: u32, y: u32| at[x as usize * k + y as usize];
    let (zero, one) = (index_of(origin)?, index_of(unit)?);
    let vertical_at = |x: u32| plane.parallel_through(point_at(x, zero), m0);
    let unit_vertical = vertical_at(one)?;
    let mut slopes = Vec::with_capacity(plane.num_lines());
    for l in 0..plane.num_lines() as u32 {
        if plane.parallel(l, m0) {
            slopes.push(Slope::Infinite);
        } else {
            let through_origin = plane.parallel_through(origin, l)?;
            let p = plane.meet(through_origin, unit_vertical)?;
            slopes.push(Slope::Finite(coords[p as usize].1));
        }
    }
    // the line through O with slope a joins O and (1, a)
    let mut ternary = vec![0u32; k * k * k];
    let verticals: Vec<u32> = (0..k as u32).map(vertical_at).collect::<Result<_, _>>()?;
    for a in 0..k as u32 {
        let base = plane.join(origin, point_at(one, a))?;
        for b in 0..k as u32 {
            let l = plane.parallel_through(point_at(zero, b), base)?;
            for x in 0..k as u32 {
                let p = plane.meet(l, verticals[x as usize])?;
                ternary[(a as usize * k + x as usize) * k + b as usize] = coords[p as usize].1;
            }
        }
    }
    let names = carrier.iter().map(|&p| plane.point_name(p).to_string()).collect();
    let mut ptr = Ptr {
        carrier,
        names,
        zero,
        one,
        ternary,
        add: Vec::new(),
        mul: Vec::new(),
        frame: Some(frame),
        coords,
        slopes,
    };
    ptr.derive_operations();
    Ok(ptr)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PtrAxiomResult {
    pub axiom: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PtrReport {
    pub size: usize,
    pub axioms: Vec<PtrAxiomResult>,
}

impl PtrReport {
    pub fn all_hold(&self) -> bool {
        self.axioms.iter().all(|a| a.holds)
    }

    pub fn get(&self, axiom: &str) -> Option<&PtrAxiomResult> {
        self.axioms.iter().find(|a| a.axiom == axiom)
    }
}

fn first_failure<I: Iterator<Item = Vec<u32>>>(axiom: &'static str, mut it: I) -> PtrAxiomResult {
    let witness = it.next();
    PtrAxiomResult { axiom, holds: witness.is_none(), witness }
}

/// Checks T-1 to T-5 exhaustively. Witnesses list the universally quantified values.
pub fn verify_ptr_axioms(ptr: &Ptr) -> PtrReport {
    let k = ptr.size() as u32;
    let (z, o) = (ptr.zero, ptr.one);
    let t = |a, x, b| ptr.t(a, x, b);
    let all = |n: usize| -> Box<dyn Iterator<Item = Vec<u32>>> {
        let mut it: Box<dyn Iterator<Item = Vec<u32>>> = Box::new(std::iter::once(Vec::new()));
        for _ in 0..n {
            it = Box::new(it.flat_map(move |v| {
                (0..k).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            }));
        }
        it
    };
    let t1 = first_failure("T-1", all(1).filter(|v| t(o, v[0], z) != v[0] || t(v[0], o, z) != v[0]));
    let t2 = first_failure("T-2", all(2).filter(|v| t(v[0], z, v[1]) != v[1] || t(z, v[0], v[1]) != v[1]));
    let t3 = first_failure("T-3", all(3).filter(|v| (0..k).filter(|&b| t(v[0], v[1], b) == v[2]).count() != 1));
    let t4 = first_failure(
        "T-4",
        all(4)
            .filter(|v| v[0] != v[1])
            .filter(|v| (0..k).filter(|&x| t(v[0], x, v[2]) == t(v[1], x, v[3])).count() != 1),
    );
    let t5 = {
        let mut witness = None;
        'outer: for x in 0..k {
            for x2 in (0..k).filter(|&x2| x2 != x) {
                let mut hits = vec![0u32; (k * k) as usize];
                for a in 0..k {
                    for b in 0..k {
                        hits[(t(a, x, b) * k + t(a, x2, b)) as usize] += 1;
                    }
                }
                if let Some(i) = hits.iter().position(|&h| h != 1) {
                    witness = Some(vec![x, x2, i as u32 / k, i as u32 % k]);
                    break 'outer;
                }
            }
        }
        PtrAxiomResult { axiom: "T-5", holds: witness.is_none(), witness }
    };
    PtrReport { size: k as usize, axioms: vec![t1, t2, t3, t4, t5] }
}

/// The structure `(K, T(a,1,b), T(a,x,0))`, rejected unless it is a field.
pub fn ptr_to_field(ptr: &Ptr) -> Result<FiniteStructure, PtrError> {
    let k = ptr.size();
    let mut f = field_from_tables("ptr-field", k, ptr.add.clone(), ptr.mul.clone()).map_err(|e| match e {
        StructureError::NotAField(v) => PtrError::NotAField(v),
        e => PtrError::Structure(e),
    })?;
    if f.units() != Some((ptr.zero, ptr.one)) {
        return Err(PtrError::Construction("derived field has different units than the ring".into()));
    }
    f.set_names(vocab::ELEM, ptr.names.clone())?;
    Ok(f)
}

/// Outcome of `F → PP_∈(F) → PTR → F′`, with both isomorphisms.
#[derive(Debug, Clone, Serialize)]
pub struct RoundTrip {
    pub field_size: usize,
    pub points: usize,
    pub lines: usize,
    pub frame: CoordinateFrame,
    pub ptr_axioms: PtrReport,
    /// Image in `F′` of each element of `F`.
    pub field_isomorphism: Option<Vec<u32>>,
    /// Whether the coordinate map is an incidence isomorphism `Π → PP_∈(F′)`.
    pub plane_isomorphism: bool,
}

impl RoundTrip {
    pub fn ok(&self) -> bool {
        self.ptr_axioms.all_hold() && self.field_isomorphism.is_some() && self.plane_isomorphism
    }
}

/// The analytic plane over a finite field, with its incidence data.
pub fn analytic_plane(field: &FiniteStructure) -> Result<(FiniteStructure, Plane), PtrError> {
    let s = transduce(&scheme_pp_in(), field, u64::MAX)?.structure;
    let p = Plane::from_structure(&s)?;
    Ok((s, p))
}

pub fn round_trip_check(field: &FiniteStructure) -> Result<RoundTrip, PtrError> {
    let (_, plane) = analytic_plane(field)?;
    let frame = choose_frame(&plane, FrameOverrides::default())?;
    let ptr = extract_ptr(&plane, frame)?;
    let report = verify_ptr_axioms(&ptr);
    let derived = ptr_to_field(&ptr)?;
    let field_iso = field_isomorphism(field, &derived);
    let phi = scheme_pp_in();
    let back = transduce(&phi, &derived, u64::MAX)?;
    let back_plane = Plane::from_structure(&back.structure)?;
    let mut point_map = Vec::with_capacity(plane.num_points());
    for &(x, y) in &ptr.coords {
        let id = back
            .element_of(&phi, &derived, vocab::POINT, &[x, y])?
            .ok_or_else(|| PtrError::Construction(format!("no point ({}, {}) in the rebuilt plane", x, y)))?;
        point_map.push(id);
    }
    let plane_iso = plane_isomorphism(&plane, &back_plane, &point_map).is_some();
    Ok(RoundTrip {
        field_size: field.carrier_size(vocab::ELEM),
        points: plane.num_points(),
        lines: plane.num_lines(),
        frame,
        ptr_axioms: report,
        field_isomorphism: field_iso,
        plane_isomorphism: plane_iso,
    })
}

#[cfg(test)]
mod tests;
