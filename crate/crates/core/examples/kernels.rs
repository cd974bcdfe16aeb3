//! The two field decision procedures and the Gröbner basis routine.

use geocheck::formula::{parse_formula, vocab};
use geocheck::poly::{acf0_decide, groebner_basis, rcf_decide, MultiPoly, PolyRing};

fn main() {
    let v = vocab::ordered_field();
    for s in [
        "(exists ((x Elem)) (= (mul x x) -1))",
        "(forall ((x Elem) (y Elem)) (=> (= (add (mul x x) (mul y y)) 0) (= x 0)))",
        "(forall ((x Elem)) (=> (= (mul x x x) 1) (= x 1)))",
        "(forall ((x Elem) (y Elem)) (=> (= (mul x y) 0) (or (= x 0) (= y 0))))",
    ] {
        let f = parse_formula(s, &v).unwrap();
        println!("{}\n  ACF0 {:?}  RCF {:?}", s, acf0_decide(&f).unwrap(), rcf_decide(&f).unwrap());
    }
    for s in ["(forall ((a Elem) (b Elem)) (exists ((x Elem)) (= (add (mul x x x) (mul a x) b) 0)))", "(forall ((x Elem)) (lt 0 (add (mul x x) 1)))"] {
        println!("{}\n  RCF {:?}", s, rcf_decide(&parse_formula(s, &v).unwrap()).unwrap());
    }

    let r = PolyRing::new(&["x", "y"]);
    let gens = [MultiPoly::parse("x*y-1", &r).unwrap(), MultiPoly::parse("x^2-1", &r).unwrap()];
    let gb = groebner_basis(&gens).unwrap();
    let basis: Vec<String> = gb.polys.iter().map(|p| p.to_string()).collect();
    println!("basis of (xy-1, x^2-1): [{}]", basis.join(", "));
    println!("y - x in the ideal: {}", gb.contains(&MultiPoly::parse("y-x", &r).unwrap()));
}
