use super::Plane;
use crate::formula::vocab;
use crate::structure::FiniteStructure;

struct Tables {
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    units: (u32, u32),
}

impl Tables {
    fn of(f: &FiniteStructure) -> Option<Self> {
        let n = f.carrier_size(vocab::ELEM);
        let m = n as u32;
        let table = |op: &str| -> Option<Vec<u32>> {
            (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).map(|(a, b)| f.apply(op, &[a, b])).collect()
        };
        Some(Tables { n, add: table("add")?, mul: table("mul")?, units: f.units()? })
    }

    fn op(&self, t: &[u32], a: u32, b: u32) -> u32 {
        t[a as usize * self.n + b as usize]
    }
}

const NONE: u32 = u32::MAX;

/// Closes a partial map under both operations; false on a clash.
fn propagate(s: &Tables, t: &Tables, map: &mut [u32], inv: &mut [u32]) -> bool {
    loop {
        let mut changed = false;
        let assigned: Vec<u32> = (0..s.n as u32).filter(|&e| map[e as usize] != NONE).collect();
        for &u in &assigned {
            for &v in &assigned {
                for (ts, tt) in [(&s.add, &t.add), (&s.mul, &t.mul)] {
                    let src = s.op(ts, u, v);
                    let dst = t.op(tt, map[u as usize], map[v as usize]);
                    match map[src as usize] {
                        NONE if inv[dst as usize] == NONE => {
                            map[src as usize] = dst;
                            inv[dst as usize] = src;
                            changed = true;
                        }
                        NONE => return false,
                        img if img != dst => return false,
                        _ => {}
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(s: &Tables, t: &Tables, map: &mut Vec<u32>, inv: &mut Vec<u32>) -> bool {
    if !propagate(s, t, map, inv) {
        return false;
    }
    let Some(e) = map.iter().position(|&v| v == NONE) else { return true };
    for f in (0..t.n).filter(|&f| inv[f] == NONE) {
        let (mut m2, mut i2) = (map.clone(), inv.clone());
        m2[e] = f as u32;
        i2[f] = e as u32;
        if search(s, t, &mut m2, &mut i2) {
            *map = m2;
            *inv = i2;
            return true;
        }
    }
    false
}

/// An isomorphism of field structures sending 0 to 0 and 1 to 1, by
/// backtracking over maps closed under addition and multiplication.
pub fn field_isomorphism(a: &FiniteStructure, b: &FiniteStructure) -> Option<Vec<u32>> {
    let (s, t) = (Tables::of(a)?, Tables::of(b)?);
    if s.n != t.n {
        return None;
    }
    let mut map = vec![NONE; s.n];
    let mut inv = vec![NONE; s.n];
    for (x, y) in [(s.units.0, t.units.0), (s.units.1, t.units.1)] {
        map[x as usize] = y;
        inv[y as usize] = x;
    }
    search(&s, &t, &mut map, &mut inv).then_some(map)
}

/// Extends a point bijection to lines and checks that incidence is preserved
/// in both directions. Returns the line map.
pub fn plane_isomorphism(from: &Plane, to: &Plane, points: &[u32]) -> Option<Vec<u32>> {
    let np = from.num_points();
    if np != to.num_points() || from.num_lines() != to.num_lines() || points.len() != np {
        return None;
    }
    let mut seen = vec![false; np];
    for &q in points {
        if q as usize >= np || std::mem::replace(&mut seen[q as usize], true) {
            return None;
        }
    }
    let mut lines = Vec::with_capacity(from.num_lines());
    let mut used = vec![false; to.num_lines()];
    for l in 0..from.num_lines() as u32 {
        let on = from.points_on(l);
        let image = to.join(points[on[0] as usize], points[on[1] as usize]).ok()?;
        if std::mem::replace(&mut used[image as usize], true) {
            return None;
        }
        lines.push(image);
    }
    for p in 0..np as u32 {
        for l in 0..from.num_lines() as u32 {
            if from.on(p, l) != to.on(points[p as usize], lines[l as usize]) {
                return None;
            }
        }
    }
    Some(lines)
}
