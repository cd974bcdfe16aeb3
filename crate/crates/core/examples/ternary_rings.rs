//! Extracts planar ternary rings from a Pappian plane and from the
//! nearfield plane of order 9, and compares their multiplications.

use geocheck::formula::vocab;
use geocheck::ptr::{analytic_plane, choose_frame, extract_ptr, verify_ptr_axioms, FrameOverrides, Plane, Ptr};
use geocheck::structure::{build_prime_field, FiniteStructure};

fn show(name: &str, ptr: &Ptr) {
    let report = verify_ptr_axioms(ptr);
    let axioms: Vec<String> = report.axioms.iter().map(|a| format!("{}={}", a.axiom, if a.holds { "ok" } else { "FAIL" })).collect();
    println!("{}: |K| = {}  {}", name, ptr.size(), axioms.join(" "));
    let k = ptr.size() as u32;
    if k <= 5 {
        for a in 0..k {
            let row: Vec<String> = (0..k).map(|b| ptr.mul(a, b).to_string()).collect();
            println!("  {} * _ = {}", a, row.join(" "));
        }
    }
    match ptr.noncommuting_pair() {
        None => println!("  multiplication is commutative"),
        Some((a, b)) => println!("  {}·{} = {} but {}·{} = {}", a, b, ptr.mul(a, b), b, a, ptr.mul(b, a)),
    }
}

fn ptr_of(s: &FiniteStructure) -> Ptr {
    let plane = Plane::from_structure(s).unwrap();
    extract_ptr(&plane, choose_frame(&plane, FrameOverrides::default()).unwrap()).unwrap()
}

// GF(9) = GF(3)[i], i² = -1, coded u + 3v
fn gf9_mul(a: u32, b: u32) -> u32 {
    let (a0, a1, b0, b1) = (a % 3, a / 3, b % 3, b / 3);
    (a0 * b0 + 2 * a1 * b1) % 3 + 3 * ((a0 * b1 + a1 * b0) % 3)
}

fn gf9_add(a: u32, b: u32) -> u32 {
    (a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3)
}

fn nearfield_plane() -> FiniteStructure {
    let squares: Vec<u32> = (1..9).map(|x| gf9_mul(x, x)).collect();
    let circ = |x: u32, m: u32| if m == 0 || squares.contains(&m) { gf9_mul(x, m) } else { gf9_mul(gf9_mul(gf9_mul(x, x), x), m) };
    let mut lines: Vec<Vec<u32>> = Vec::new();
    for m in 0..9 {
        for b in 0..9 {
            lines.push((0..9).map(|x| x * 9 + gf9_add(circ(x, m), b)).collect());
        }
    }
    for c in 0..9 {
        lines.push((0..9).map(|y| c * 9 + y).collect());
    }
    let mut s = FiniteStructure::new(vocab::incidence());
    s.set_carrier(vocab::POINT, 81).unwrap();
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

fn main() {
    for p in [3, 5] {
        let (s, _) = analytic_plane(&build_prime_field(p).unwrap()).unwrap();
        show(&format!("AG(2,{})", p), &ptr_of(&s));
    }
    show("nearfield plane of order 9", &ptr_of(&nearfield_plane()));
}
