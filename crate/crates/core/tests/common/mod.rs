#![allow(dead_code)]

use geocheck::formula::{parse_formula, vocab, Formula};
use geocheck::structure::{build_prime_field, load_cayley_field, FiniteStructure};
use geocheck::theories::theory;

pub const GF4: &str = include_str!("../../data/gf4.cayley");

/// GF(q) for a prime q, or GF(4) from its Cayley tables.
pub fn field(q: u32) -> FiniteStructure {
    if q == 4 {
        load_cayley_field(GF4).unwrap()
    } else {
        build_prime_field(q).unwrap()
    }
}

pub fn conjecture(name: &str, theory_name: &str) -> Formula {
    let path = format!("{}/conjectures/{}.sexp", env!("CARGO_MANIFEST_DIR"), name);
    let text = std::fs::read_to_string(path).unwrap();
    parse_formula(&text, &theory(theory_name).unwrap().vocabulary).unwrap()
}

/// An incidence structure from explicit point sets, with strict `Par` filled in.
pub fn incidence_structure(np: usize, lines: &[Vec<u32>]) -> FiniteStructure {
    let mut s = FiniteStructure::new(vocab::incidence());
    s.set_carrier(vocab::POINT, np).unwrap();
    s.set_carrier(vocab::LINE, lines.len()).unwrap();
    s.touch_relation("Par").unwrap();
    for (l, ps) in lines.iter().enumerate() {
        for &p in ps {
            s.insert("in", vec![p, l as u32]).unwrap();
        }
    }
    for (i, a) in lines.iter().enumerate() {
        for (j, b) in lines.iter().enumerate() {
            if i != j && !a.iter().any(|p| b.contains(p)) {
                s.insert("Par", vec![i as u32, j as u32]).unwrap();
            }
        }
    }
    s
}

// GF(9) = GF(3)[i] with i² = -1, element u + vi coded as u + 3v
fn gf9_mul(a: u32, b: u32) -> u32 {
    let (a0, a1, b0, b1) = (a % 3, a / 3, b % 3, b / 3);
    (a0 * b0 + 2 * a1 * b1) % 3 + 3 * ((a0 * b1 + a1 * b0) % 3)
}

fn gf9_add(a: u32, b: u32) -> u32 {
    (a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3)
}

/// Affine plane over the Dickson nearfield of order 9. Its coordinate
/// ring has a noncommutative multiplication.
pub fn nearfield_plane() -> FiniteStructure {
    let squares: Vec<u32> = (1..9).map(|x| gf9_mul(x, x)).collect();
    let circ = |x: u32, m: u32| {
        if m == 0 || squares.contains(&m) {
            gf9_mul(x, m)
        } else {
            gf9_mul(gf9_mul(gf9_mul(x, x), x), m)
        }
    };
    let pt = |x: u32, y: u32| x * 9 + y;
    let mut lines = Vec::new();
    for m in 0..9 {
        for b in 0..9 {
            lines.push((0..9).map(|x| pt(x, gf9_add(circ(x, m), b))).collect());
        }
    }
    for c in 0..9 {
        lines.push((0..9).map(|y| pt(c, y)).collect());
    }
    incidence_structure(81, &lines)
}
