use super::*;
use crate::structure::{build_prime_field, check_formula, load_cayley_field};
use crate::theories::axiom;

const GF4: &str = include_str!("../../data/gf4.cayley");

fn ag(p: u32) -> Plane {
    analytic_plane(&build_prime_field(p).unwrap()).unwrap().1
}

fn extracted(p: u32) -> Ptr {
    let plane = ag(p);
    let f = choose_frame(&plane, FrameOverrides::default()).unwrap();
    extract_ptr(&plane, f).unwrap()
}

/// An incidence structure from explicit point sets, with `Par` filled in.
fn incidence_structure(np: usize, lines: &[Vec<u32>]) -> FiniteStructure {
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

/// Arithmetic of GF(9) = GF(3)[i], i² = -1, on codes u + 3v.
fn gf9_mul(a: u32, b: u32) -> u32 {
    let (a0, a1, b0, b1) = (a % 3, a / 3, b % 3, b / 3);
    let re = (a0 * b0 + 2 * a1 * b1) % 3;
    let im = (a0 * b1 + a1 * b0) % 3;
    re + 3 * im
}

fn gf9_add(a: u32, b: u32) -> u32 {
    (a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3)
}

/// The affine plane over the Dickson nearfield of order 9: lines
/// `y = x∘m + b` and `x = c`, where `x∘m = x·m` for square `m` and `x³·m` otherwise.
fn nearfield_plane() -> FiniteStructure {
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

#[test]
fn frame_is_lexicographically_first() {
    let plane = ag(3);
    let f = choose_frame(&plane, FrameOverrides::default()).unwrap();
    let nl = plane.num_lines() as u32;
    let mut first = None;
    'search: for l0 in 0..nl {
        for m0 in 0..nl {
            for delta in 0..nl {
                for unit in 0..plane.num_points() as u32 {
                    let common: Vec<u32> = plane.points_on(l0).iter().copied().filter(|&p| plane.on(p, m0)).collect();
                    if l0 != m0 && common.len() == 1 {
                        let o = common[0];
                        if delta != l0 && delta != m0 && plane.on(o, delta) && plane.on(unit, l0) && unit != o {
                            first = Some(CoordinateFrame { l0, m0, delta, origin: o, unit });
                            break 'search;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(Some(f), first);
    assert_eq!(choose_frame(&plane, FrameOverrides::default()).unwrap(), f);
}

#[test]
fn frame_errors() {
    let plane = ag(3);
    let bad = FrameOverrides { l0: Some(0), delta: Some(0), ..Default::default() };
    assert!(matches!(choose_frame(&plane, bad), Err(PtrError::Frame(_))));
    let parallel_axes = (1..plane.num_lines() as u32).find(|&m| plane.disjoint(0, m)).unwrap();
    let bad = FrameOverrides { l0: Some(0), m0: Some(parallel_axes), ..Default::default() };
    assert!(matches!(choose_frame(&plane, bad), Err(PtrError::Frame(_))));
    let collinear = incidence_structure(3, &[vec![0, 1, 2]]);
    assert!(matches!(Plane::from_structure(&collinear), Err(PtrError::NotAffine(_))));
    let triangle = incidence_structure(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
    assert!(matches!(Plane::from_structure(&triangle), Err(PtrError::NotAffine(_))));
}

/// Compares `T` with `a·x + b` computed mod p through the isomorphism to GF(p).
fn ternary_is_affine(p: u32) {
    let ptr = extracted(p);
    let gf = build_prime_field(p).unwrap();
    let iota = field_isomorphism(&ptr_to_field(&ptr).unwrap(), &gf).unwrap();
    for a in 0..p {
        for x in 0..p {
            for b in 0..p {
                let (ia, ix, ib) = (iota[a as usize], iota[x as usize], iota[b as usize]);
                assert_eq!(iota[ptr.t(a, x, b) as usize], (ia * ix + ib) % p, "T({a},{x},{b})");
            }
        }
    }
}

#[test]
fn ternary_matches_field_arithmetic() {
    ternary_is_affine(2);
    ternary_is_affine(3);
}

#[test]
fn coordinates_and_slopes() {
    let ptr = extracted(3);
    let f = ptr.frame.unwrap();
    assert_eq!(ptr.coords[f.origin as usize], (ptr.zero, ptr.zero));
    assert_eq!(ptr.coords[f.unit as usize], (ptr.one, ptr.zero));
    assert_eq!(ptr.slopes[f.m0 as usize], Slope::Infinite);
    assert_eq!(ptr.slopes[f.l0 as usize], Slope::Finite(ptr.zero));
    assert_eq!(ptr.slopes[f.delta as usize], Slope::Finite(ptr.one));
    let plane = ag(3);
    for l in 0..plane.num_lines() as u32 {
        for m in 0..plane.num_lines() as u32 {
            assert_eq!(ptr.slopes[l as usize] == ptr.slopes[m as usize], plane.parallel(l, m));
        }
    }
    for x in 0..3 {
        assert_eq!(ptr.t(ptr.one, x, ptr.zero), x);
    }
}

#[test]
fn axioms_hold_on_prime_planes() {
    for p in [2, 3, 5] {
        let r = verify_ptr_axioms(&extracted(p));
        assert!(r.all_hold(), "{:?}", r);
        assert_eq!(r.axioms.len(), 5);
    }
}

#[test]
fn injected_fault_breaks_t2() {
    let mut ptr = extracted(3);
    let (z, o) = (ptr.zero, ptr.one);
    let other = (0..3).find(|&v| v != z && v != o).unwrap();
    ptr.set_t(z, o, other, z);
    let r = verify_ptr_axioms(&ptr);
    let t2 = r.get("T-2").unwrap();
    assert!(!t2.holds);
    assert_eq!(t2.witness, Some(vec![o, other]));
    assert!(serde_json::to_string(&r).unwrap().contains("\"witness\""));
}

#[test]
fn derived_fields_match_source() {
    for p in [2, 3, 5] {
        let f = ptr_to_field(&extracted(p)).unwrap();
        assert!(field_isomorphism(&f, &build_prime_field(p).unwrap()).is_some());
    }
    let ptr = extracted(5);
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                assert_eq!(ptr.mul(ptr.mul(a, b), c), ptr.mul(a, ptr.mul(b, c)));
            }
        }
    }
}

#[test]
fn non_distributive_table_is_rejected() {
    // GF(5) addition with multiplication transported by the swap 2 ↔ 4
    let s = |v: u32| match v {
        2 => 4,
        4 => 2,
        v => v,
    };
    let star = |a: u32, x: u32| s(s(a) * s(x) % 5);
    let table = (0..125u32).map(|i| (star(i / 25, i / 5 % 5) + i % 5) % 5).collect();
    let ptr = Ptr::from_table(5, 0, 1, table).unwrap();
    match ptr_to_field(&ptr) {
        Err(PtrError::NotAField(v)) => {
            assert_eq!(v.axiom, "distributivity");
            let [a, b, c] = v.witness[..] else { panic!() };
            assert_ne!(ptr.mul(a, ptr.add(b, c)), ptr.add(ptr.mul(a, b), ptr.mul(a, c)));
        }
        other => panic!("{:?}", other.map(|_| ())),
    }
}

#[test]
fn round_trips() {
    for f in [build_prime_field(2).unwrap(), build_prime_field(7).unwrap(), load_cayley_field(GF4).unwrap()] {
        let r = round_trip_check(&f).unwrap();
        assert!(r.ok(), "{:?}", r);
    }
}

#[test]
fn frame_independence() {
    let plane = ag(3);
    let gf3 = build_prime_field(3).unwrap();
    let mut frames = 0;
    for l0 in 0..plane.num_lines() as u32 {
        for m0 in 0..plane.num_lines() as u32 {
            for delta in 0..plane.num_lines() as u32 {
                for unit in plane.points_on(l0).to_vec() {
                    let o = FrameOverrides { l0: Some(l0), m0: Some(m0), delta: Some(delta), unit: Some(unit) };
                    let Ok(frame) = choose_frame(&plane, o) else { continue };
                    let ptr = extract_ptr(&plane, frame).unwrap();
                    assert!(verify_ptr_axioms(&ptr).all_hold());
                    assert!(field_isomorphism(&ptr_to_field(&ptr).unwrap(), &gf3).is_some());
                    frames += 1;
                }
            }
        }
    }
    // 12 choices of ℓ₀, 9 of m₀, 2 diagonals, 2 unit points
    assert_eq!(frames, 12 * 9 * 2 * 2);
}

#[test]
fn commutativity_tracks_pappus() {
    let pappus = axiom("Pappus").unwrap().formula;
    let gf4 = load_cayley_field(GF4).unwrap();
    for field in [build_prime_field(2).unwrap(), build_prime_field(3).unwrap(), gf4] {
        let (s, plane) = analytic_plane(&field).unwrap();
        let ptr = extract_ptr(&plane, choose_frame(&plane, FrameOverrides::default()).unwrap()).unwrap();
        assert!(check_formula(&s, &pappus).unwrap().0);
        assert_eq!(ptr.noncommuting_pair(), None);
    }
    let s = nearfield_plane();
    let plane = Plane::from_structure(&s).unwrap();
    let ptr = extract_ptr(&plane, choose_frame(&plane, FrameOverrides::default()).unwrap()).unwrap();
    assert!(verify_ptr_axioms(&ptr).all_hold());
    assert!(ptr.noncommuting_pair().is_some());
    assert!(matches!(ptr_to_field(&ptr), Err(PtrError::NotAField(_))));
    assert!(!check_formula(&s, &pappus).unwrap().0);
}
