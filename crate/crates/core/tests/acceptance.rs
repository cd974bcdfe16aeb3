//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --test acceptance`.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use geocheck::formula::{classify_fragment, parse_formula, random_sentence, vocab};
use geocheck::gtc::{run_gtc, Job, Options, Status};
use geocheck::poly::{acf0_decide, groebner_basis, rcf_decide, Decision, MultiPoly, PolyRing};
use geocheck::ptr::{analytic_plane, choose_frame, extract_ptr, round_trip_check, verify_ptr_axioms, FrameOverrides, Plane, Ptr};
use geocheck::scheme::{apply_transduction, scheme_pp_in, translate_formula};
use geocheck::segment::{seg_add, seg_inverse, seg_mul, seg_trichotomy, SegmentClass, Trichotomy};
use geocheck::structure::{check_formula, eval_formula, eval_naive, Assignment, FiniteStructure};
use geocheck::theories::axiom;

use common::{conjecture, field, nearfield_plane};

const ROUND_TRIP_LIMIT: Duration = Duration::from_secs(60);
const PLANE_LIMIT: Duration = Duration::from_secs(120);
const FUNDAMENTAL_LIMIT: Duration = Duration::from_secs(120);
const SEGMENT_LIMIT: Duration = Duration::from_secs(10);
const KERNEL_LIMIT: Duration = Duration::from_secs(60);
const ALTITUDE_LIMIT: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;

fn within(started: Instant, limit: Duration, detail: String) -> Outcome {
    let t = started.elapsed();
    if t < limit {
        Ok(format!("{} in {:.2?}", detail, t))
    } else {
        Err(format!("{} but took {:.2?} (limit {:?})", detail, t, limit))
    }
}

// F′ on the first axis by the classical constructions: with E on the second
// axis, a + b and a·b come from parallels alone
fn derived_tables(plane: &Plane, l0: u32, m0: u32, origin: u32, unit: u32) -> Result<(Vec<u32>, Vec<u32>, Vec<u32>), String> {
    let e = |r: Result<u32, geocheck::ptr::PtrError>| r.map_err(|e| e.to_string());
    let axis = plane.points_on(l0).to_vec();
    let aux = *plane.points_on(m0).iter().find(|&&p| p != origin).ok_or("second axis has one point")?;
    let h = e(plane.parallel_through(aux, l0))?;
    let ei = e(plane.join(aux, unit))?;
    let idx = |p: u32| axis.iter().position(|&q| q == p).map(|i| i as u32).ok_or("construction left the axis".to_string());
    let k = axis.len();
    let (mut add, mut mul) = (vec![0; k * k], vec![0; k * k]);
    for (i, &a) in axis.iter().enumerate() {
        let a_up = e(plane.meet(e(plane.parallel_through(a, m0))?, h))?;
        let ea = e(plane.join(aux, a))?;
        for (j, &b) in axis.iter().enumerate() {
            let s = e(plane.meet(e(plane.parallel_through(a_up, e(plane.join(aux, b))?))?, l0))?;
            add[i * k + j] = idx(s)?;
            let b_m = e(plane.meet(e(plane.parallel_through(b, ei))?, m0))?;
            let p = e(plane.meet(e(plane.parallel_through(b_m, ea))?, l0))?;
            mul[i * k + j] = idx(p)?;
        }
    }
    Ok((axis, add, mul))
}

fn round_trip() -> Outcome {
    let started = Instant::now();
    for q in [2, 3, 5, 7, 11, 4] {
        let f = field(q);
        let r = round_trip_check(&f).map_err(|e| format!("GF({}): {}", q, e))?;
        if !r.ok() {
            return Err(format!("GF({}): round trip reported {:?}", q, r.ptr_axioms));
        }
        let iota = r.field_isomorphism.clone().unwrap();
        let mut sorted = iota.clone();
        sorted.sort_unstable();
        if sorted != (0..q).collect::<Vec<u32>>() {
            return Err(format!("GF({}): iota is not a bijection", q));
        }
        let (_, plane) = analytic_plane(&f).map_err(|e| e.to_string())?;
        let fr = r.frame;
        let (axis, add, mul) = derived_tables(&plane, fr.l0, fr.m0, fr.origin, fr.unit)?;
        let k = q as usize;
        let (z, o) = f.units().unwrap();
        let pos = |p: u32| axis.iter().position(|&x| x == p).unwrap() as u32;
        if iota[z as usize] != pos(fr.origin) || iota[o as usize] != pos(fr.unit) {
            return Err(format!("GF({}): iota does not fix the units", q));
        }
        for a in 0..q {
            for b in 0..q {
                let (ia, ib) = (iota[a as usize] as usize, iota[b as usize] as usize);
                if iota[f.apply("add", &[a, b]).unwrap() as usize] != add[ia * k + ib]
                    || iota[f.apply("mul", &[a, b]).unwrap() as usize] != mul[ia * k + ib]
                {
                    return Err(format!("GF({}): iota is not a homomorphism at ({}, {})", q, a, b));
                }
            }
        }
    }
    within(started, ROUND_TRIP_LIMIT, "GF(2,3,5,7,11,4) round trip, iota checked against constructed F′".into())
}

fn axioms() -> Outcome {
    let names = ["I-1", "I-2", "I-3", "ParAx", "Pappus", "De-1", "De-2"];
    let mut times = Vec::new();
    for q in [2, 3, 4, 5] {
        let started = Instant::now();
        let (s, _) = analytic_plane(&field(q)).map_err(|e| e.to_string())?;
        for n in names {
            let (holds, cex) = check_formula(&s, &axiom(n).unwrap().formula).map_err(|e| e.to_string())?;
            if !holds {
                return Err(format!("{} fails on AG(2,{}): {:?}", n, q, cex));
            }
        }
        let t = started.elapsed();
        if t >= PLANE_LIMIT {
            return Err(format!("AG(2,{}) took {:.2?}", q, t));
        }
        times.push(format!("q={} {:.2?}", q, t));
    }
    Ok(format!("all seven axioms hold ({})", times.join(", ")))
}

fn fundamental_property() -> Outcome {
    let started = Instant::now();
    let phi = scheme_pp_in();
    let sigma = vocab::incidence();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut truths = 0;
    for p in [2, 3] {
        let f = field(p);
        let image = apply_transduction(&phi, &f).map_err(|e| e.to_string())?;
        for i in 0..500 {
            let size = rng.gen_range(1..6);
            let theta = random_sentence(&sigma, 2, size, &mut rng);
            let t = translate_formula(&phi, &theta).map_err(|e| e.to_string())?;
            let left = eval_naive(&f, &t, &Assignment::new()).map_err(|e| e.to_string())?;
            let right = eval_formula(&image, &theta, &Assignment::new()).map_err(|e| e.to_string())?;
            if left != right {
                return Err(format!("GF({}) sentence {}: field says {}, plane says {}", p, i, left, right));
            }
            truths += right as usize;
        }
    }
    within(started, FUNDAMENTAL_LIMIT, format!("1000 sentences agree ({} true)", truths))
}

// T-1 to T-5 read straight off the ternary table
fn brute_force_ptr(ptr: &Ptr) -> bool {
    let k = ptr.size() as u32;
    let (z, o) = (ptr.zero, ptr.one);
    let t = |a, x, b| ptr.t(a, x, b);
    let all = 0..k;
    for a in all.clone() {
        if t(o, a, z) != a || t(a, o, z) != a {
            return false;
        }
        for b in all.clone() {
            if t(a, z, b) != b || t(z, a, b) != b {
                return false;
            }
            for y in all.clone() {
                if (0..k).filter(|&c| t(a, b, c) == y).count() != 1 {
                    return false;
                }
                for a2 in all.clone().filter(|&a2| a2 != a) {
                    if (0..k).filter(|&x| t(a, x, b) == t(a2, x, y)).count() != 1 {
                        return false;
                    }
                }
            }
        }
    }
    for x in all.clone() {
        for x2 in all.clone().filter(|&x2| x2 != x) {
            for y in all.clone() {
                for y2 in all.clone() {
                    let n = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|&(a, b)| t(a, x, b) == y && t(a, x2, b) == y2).count();
                    if n != 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn commutative(ptr: &Ptr) -> bool {
    let k = ptr.size() as u32;
    (0..k).all(|a| (0..k).all(|b| ptr.t(a, b, ptr.zero) == ptr.t(b, a, ptr.zero)))
}

fn ptr_of(s: &FiniteStructure) -> Result<Ptr, String> {
    let plane = Plane::from_structure(s).map_err(|e| e.to_string())?;
    let frame = choose_frame(&plane, FrameOverrides::default()).map_err(|e| e.to_string())?;
    extract_ptr(&plane, frame).map_err(|e| e.to_string())
}

fn ptr_axioms() -> Outcome {
    for q in [2, 3, 5] {
        let (s, _) = analytic_plane(&field(q)).map_err(|e| e.to_string())?;
        let ptr = ptr_of(&s)?;
        if !verify_ptr_axioms(&ptr).all_hold() || !brute_force_ptr(&ptr) {
            return Err(format!("T-1..T-5 fail on AG(2,{})", q));
        }
        if !commutative(&ptr) || ptr.noncommuting_pair().is_some() {
            return Err(format!("multiplication from AG(2,{}) is not commutative", q));
        }
    }
    let ptr = ptr_of(&nearfield_plane())?;
    if !verify_ptr_axioms(&ptr).all_hold() || !brute_force_ptr(&ptr) {
        return Err("T-1..T-5 fail on the nearfield plane".into());
    }
    if commutative(&ptr) || ptr.noncommuting_pair().is_none() {
        return Err("nearfield multiplication came out commutative".into());
    }
    Ok("q=2,3,5 commutative PTRs; order-9 nearfield control is noncommutative".into())
}

fn segments() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let sample = |rng: &mut ChaCha8Rng| {
        let r = BigRational::new(rng.gen_range(0..2000i64).into(), rng.gen_range(1..200i64).into());
        (SegmentClass::new(r.clone()).unwrap(), r)
    };
    for i in 0..1000 {
        let (a, x) = sample(&mut rng);
        let (b, y) = sample(&mut rng);
        if *seg_add(&a, &b).length() != &x + &y || *seg_mul(&a, &b).length() != &x * &y {
            return Err(format!("pair {}: {} and {}", i, x, y));
        }
        let ok = match seg_trichotomy(&a, &b) {
            Trichotomy::Equal => x == y,
            Trichotomy::Less(c) => x < y && *c.length() == &y - &x,
            Trichotomy::Greater(d) => x > y && *d.length() == &x - &y,
        };
        if !ok {
            return Err(format!("trichotomy wrong for {} and {}", x, y));
        }
    }
    let (zero, one) = (SegmentClass::zero(), SegmentClass::one());
    for _ in 0..200 {
        let (a, x) = sample(&mut rng);
        let (b, _) = sample(&mut rng);
        let (c, _) = sample(&mut rng);
        let laws = [
            seg_add(&a, &b) == seg_add(&b, &a),
            seg_mul(&a, &b) == seg_mul(&b, &a),
            seg_add(&seg_add(&a, &b), &c) == seg_add(&a, &seg_add(&b, &c)),
            seg_mul(&seg_mul(&a, &b), &c) == seg_mul(&a, &seg_mul(&b, &c)),
            seg_mul(&a, &seg_add(&b, &c)) == seg_add(&seg_mul(&a, &b), &seg_mul(&a, &c)),
            seg_add(&a, &zero) == a,
            seg_mul(&a, &one) == a,
            x.is_zero() || seg_inverse(&a).map(|d| seg_mul(&a, &d)) == Some(one.clone()),
        ];
        if let Some(i) = laws.iter().position(|l| !l) {
            return Err(format!("law {} fails", i));
        }
    }
    within(started, SEGMENT_LIMIT, "1000 pairs and 200 law triples".into())
}

use Decision::{Invalid, Valid};

// (sentence, ACF₀ truth, RCF truth); None where the kernel does not apply
const CORPUS: &[(&str, Option<Decision>, Option<Decision>)] = &[
    ("(forall ((x Elem)) (lt 0 (add (mul x x) 1)))", None, Some(Valid)),
    ("(forall ((x Elem) (y Elem)) (=> (= (mul x y) 0) (or (= x 0) (= y 0))))", Some(Valid), Some(Valid)),
    ("(exists ((x Elem)) (= (mul x x) -1))", Some(Valid), Some(Invalid)),
    ("(forall ((x Elem) (y Elem)) (=> (= (add (mul x x) (mul y y)) 0) (= x 0)))", Some(Invalid), Some(Valid)),
    ("(forall ((x Elem)) (not (= (add (mul x x) x 1) 0)))", Some(Invalid), Some(Valid)),
    ("(forall ((x Elem)) (=> (= (mul x x) 1) (= x 1)))", Some(Invalid), Some(Invalid)),
    ("(forall ((x Elem) (y Elem)) (= (mul (add x y) (sub x y)) (sub (mul x x) (mul y y))))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (not (= (add x x) 0)))", Some(Invalid), Some(Invalid)),
    ("(forall ((x Elem)) (=> (= (add x x) 0) (= x 0)))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (=> (not (= x 0)) (= (mul x (inv x)) 1)))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (= (mul x (inv x)) 1))", Some(Invalid), Some(Invalid)),
    ("(exists ((x Elem)) (= (mul x x) 2))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (exists ((y Elem)) (lt x y)))", None, Some(Valid)),
    ("(exists ((y Elem)) (forall ((x Elem)) (lt x y)))", None, Some(Invalid)),
    ("(forall ((a Elem) (b Elem)) (exists ((x Elem)) (= (add (mul x x x) (mul a x) b) 0)))", None, Some(Valid)),
    ("(forall ((a Elem) (b Elem)) (exists ((x Elem)) (= (add (mul x x) (mul a x) b) 0)))", None, Some(Invalid)),
    ("(forall ((x Elem) (y Elem)) (le (mul 2 x y) (add (mul x x) (mul y y))))", None, Some(Valid)),
    ("(forall ((x Elem)) (=> (= (mul x x x) x) (or (= x 0) (= x 1) (= x -1))))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (=> (= (mul x x) x) (or (= x 0) (= x 1))))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (=> (= (mul x x x) 1) (= x 1)))", Some(Invalid), Some(Valid)),
    ("(forall ((x Elem) (y Elem)) (=> (= (mul x x) (mul y y)) (or (= x y) (= x (neg y)))))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem) (y Elem)) (=> (= (mul x x) (mul y y)) (= x y)))", Some(Invalid), Some(Invalid)),
    ("(forall ((x Elem)) (=> (= (mul x x x x) 1) (= (mul x x) 1)))", Some(Invalid), Some(Valid)),
    ("(exists ((x Elem) (y Elem)) (= (add (mul x x) (mul y y)) -1))", Some(Valid), Some(Invalid)),
    ("(forall ((x Elem) (y Elem)) (=> (lt x y) (lt (add x 1) (add y 1))))", None, Some(Valid)),
    ("(forall ((x Elem) (y Elem)) (=> (and (lt 0 x) (lt 0 y)) (lt 0 (mul x y))))", None, Some(Valid)),
    ("(forall ((x Elem)) (or (le x 0) (le 0 x)))", None, Some(Valid)),
    ("(forall ((x Elem) (y Elem) (z Elem)) (=> (and (= (mul x y) (mul x z)) (not (= x 0))) (= y z)))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (=> (= (mul x x) 2) (not (= x 1))))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem) (y Elem)) (=> (= (mul x y) 1) (not (= x 0))))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (exists ((y Elem)) (or (lt x 0) (= x (mul y y)))))", None, Some(Valid)),
    ("(forall ((x Elem)) (exists ((y Elem)) (= x (mul y y))))", None, Some(Invalid)),
    ("(forall ((x Elem)) (=> (= (mul x x) 0) (= x 0)))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (=> (not (= x 0)) (lt 0 (mul x x))))", None, Some(Valid)),
    ("(forall ((x Elem) (y Elem)) (=> (lt x y) (exists ((z Elem)) (and (lt x z) (lt z y)))))", None, Some(Valid)),
    ("(forall ((x Elem)) (= (mul (add x 1) (add x 1)) (add (mul x x) (mul 2 x) 1)))", Some(Valid), Some(Valid)),
    ("(forall ((x Elem)) (not (= (sub (mul x x) 2) 0)))", Some(Invalid), Some(Invalid)),
    ("(forall ((x Elem)) (=> (not (= x 0)) (= (inv (inv x)) x)))", Some(Valid), Some(Valid)),
];

fn kernels() -> Outcome {
    let started = Instant::now();
    let v = vocab::ordered_field();
    let (mut checked, mut monotone) = (0, 0);
    for (i, (text, acf, rcf)) in CORPUS.iter().enumerate() {
        let s = parse_formula(text, &v).map_err(|e| format!("item {}: {}", i, e))?;
        let r = rcf_decide(&s).map_err(|e| format!("item {} rcf: {}", i, e))?;
        if Some(r) != *rcf {
            return Err(format!("item {}: rcf says {:?}", i, r));
        }
        checked += 1;
        if let Some(expected) = acf {
            let a = acf0_decide(&s).map_err(|e| format!("item {} acf0: {}", i, e))?;
            if a != *expected {
                return Err(format!("item {}: acf0 says {:?}", i, a));
            }
            checked += 1;
            let universal = classify_fragment(&s).is_universal();
            if universal && !s.uses_function("inv") {
                monotone += 1;
                if a == Valid && r != Valid {
                    return Err(format!("item {}: acf0-valid but rcf-invalid", i));
                }
            }
        }
    }
    within(started, KERNEL_LIMIT, format!("{} sentences, {} verdicts agree, {} monotonicity items", CORPUS.len(), checked, monotone))
}

fn gtc(name: &str) -> Result<geocheck::gtc::Verdict, String> {
    let job = Job { theory: "m-wu".into(), conjecture: conjecture(name, "m-wu"), options: Options::default() };
    run_gtc(&job).map_err(|e| e.to_string())
}

fn isosceles_counterexample(c: &BTreeMap<String, String>) -> Result<bool, String> {
    let get = |k: &str| -> Result<BigRational, String> {
        c.get(k).ok_or(format!("no value for {}", k))?.parse().map_err(|_| format!("{} is not rational", k))
    };
    let sq = |p: &str, q: &str| -> Result<BigRational, String> {
        let dx = get(&format!("{}.x", q))? - get(&format!("{}.x", p))?;
        let dy = get(&format!("{}.y", q))? - get(&format!("{}.y", p))?;
        Ok(&dx * &dx + &dy * &dy)
    };
    Ok(sq("A", "B")? != sq("A", "C")?)
}

fn end_to_end() -> Outcome {
    let started = Instant::now();
    let v = gtc("altitudes")?;
    if v.status != Status::Valid || v.kernel != ["acf0"] {
        return Err(format!("altitudes: {} via {:?}", v.status, v.kernel));
    }
    let t = started.elapsed();
    if t >= ALTITUDE_LIMIT {
        return Err(format!("altitudes took {:.2?}", t));
    }
    let v = gtc("isosceles")?;
    let Some(c) = v.counterexample.filter(|_| v.status == Status::Invalid) else {
        return Err(format!("isosceles: {}", v.status));
    };
    if !isosceles_counterexample(&c)? {
        return Err(format!("isosceles counterexample {:?} is isosceles", c));
    }
    let v = gtc("perpendicular-exists")?;
    if v.status != Status::UnsupportedFragment || !v.report.contains("Robinson") {
        return Err(format!("forall-exists: {} ({})", v.status, v.report));
    }
    Ok(format!("altitudes valid by acf0 in {:.2?}; isosceles refuted; forall-exists unsupported", t))
}

// the S-polynomial written out from leading terms
fn s_poly(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.lead().unwrap();
    let (gm, gc) = g.lead().unwrap();
    let l: Vec<u32> = fm.iter().zip(gm.iter()).map(|(a, b)| *a.max(b)).collect();
    let cof = |m: &[u32]| -> Vec<u32> { l.iter().zip(m).map(|(a, b)| a - b).collect() };
    f.mul_term(&cof(fm), &fc.recip()).sub(&g.mul_term(&cof(gm), &gc.recip()))
}

fn buchberger() -> Outcome {
    let r = PolyRing::new(&["x", "y", "z"]);
    let p = |s: &str| MultiPoly::parse(s, &r).unwrap();
    let ideals: [&[&str]; 6] = [
        &["x*y-1", "x^2-1"],
        &["x^2+y^2+z^2-1", "x-y", "y-z^2"],
        &["x^3-2*x*y", "x^2*y-2*y^2+x"],
        &["x*y-z", "y*z-x", "z*x-y"],
        &["x^2-y", "x^3-z"],
        &["x+y+z", "x*y+y*z+z*x", "x*y*z-1"],
    ];
    let mut pairs = 0;
    for gens in ideals {
        let gens: Vec<MultiPoly> = gens.iter().map(|s| p(s)).collect();
        let gb = groebner_basis(&gens).map_err(|e| e.to_string())?;
        for (i, f) in gb.polys.iter().enumerate() {
            for g in &gb.polys[i + 1..] {
                pairs += 1;
                if !gb.reduce(&s_poly(f, g)).is_zero() {
                    return Err(format!("S({}, {}) does not reduce to 0", f, g));
                }
            }
        }
        if let Some(g) = gens.iter().find(|g| !gb.contains(g)) {
            return Err(format!("generator {} is not in its own ideal", g));
        }
    }
    let (f, g) = (p("x*y-1"), p("x^2-1"));
    let witness = p("x").mul(&f).sub(&p("y").mul(&g));
    if witness != p("y-x") {
        return Err(format!("x(xy-1) - y(x^2-1) = {}", witness));
    }
    let gb = groebner_basis(&[f, g]).map_err(|e| e.to_string())?;
    if !gb.contains(&p("y-x")) || gb.contains(&p("y")) {
        return Err("membership of y - x is decided wrongly".into());
    }
    Ok(format!("{} S-pairs over 6 bases reduce to 0; y-x witness verified", pairs))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("round-trip coordinatization", round_trip),
        ("axiom satisfaction", axioms),
        ("fundamental property", fundamental_property),
        ("ptr axioms", ptr_axioms),
        ("segment arithmetic", segments),
        ("decision kernels", kernels),
        ("end-to-end gtc", end_to_end),
        ("buchberger self-check", buchberger),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {}: {}", name, detail),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {}", name, why);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
