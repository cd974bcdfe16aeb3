use super::*;
use crate::formula::{parse_formula, vocab};

fn f(s: &str) -> crate::formula::Formula {
    parse_formula(s, &vocab::ordered_field()).unwrap()
}

fn acf(s: &str) -> Decision {
    acf0_decide_universal(&f(s)).unwrap()
}

fn rcf(s: &str) -> Decision {
    rcf_decide(&f(s)).unwrap()
}

use Decision::{Invalid, Valid};

#[test]
fn acf_examples() {
    assert_eq!(acf("(forall ((x Elem) (y Elem)) (=> (= (mul x y) 0) (or (= x 0) (= y 0))))"), Valid);
    assert_eq!(acf("(forall ((x Elem)) (=> (= (mul x x) 1) (= x 1)))"), Invalid);
    assert_eq!(acf("(forall ((x Elem)) (not (= (add (mul x x) 1) 0)))"), Invalid);
    assert_eq!(acf("(forall ((x Elem) (y Elem)) (= (mul (add x y) (sub x y)) (sub (mul x x) (mul y y))))"), Valid);
    assert_eq!(acf("(forall ((x Elem)) (not (= (add x x) 0)))"), Invalid);
    assert_eq!(acf("(forall ((x Elem)) (=> (= (add x x) 0) (= x 0)))"), Valid);
    assert_eq!(acf("(forall ((x Elem)) (= (mul x (inv x)) 1))"), Invalid);
    assert_eq!(acf("(forall ((x Elem)) (=> (not (= x 0)) (= (mul x (inv x)) 1)))"), Valid);
}

#[test]
fn acf_rejects_other_fragments() {
    assert!(acf0_decide_universal(&f("(exists ((x Elem)) (= x 1))")).is_err());
    assert!(acf0_decide_universal(&f("(forall ((x Elem)) (le 0 (mul x x)))")).is_err());
}

#[test]
fn rcf_examples() {
    assert_eq!(rcf("(forall ((x Elem)) (lt 0 (add (mul x x) 1)))"), Valid);
    assert_eq!(rcf("(exists ((x Elem)) (= (mul x x) 2))"), Valid);
    assert_eq!(rcf("(forall ((x Elem) (y Elem)) (le (mul 2 x y) (add (mul x x) (mul y y))))"), Valid);
    assert_eq!(rcf("(exists ((x Elem)) (= (mul x x) -1))"), Invalid);
    assert_eq!(rcf("(forall ((x Elem)) (=> (= (mul x x) 1) (= x 1)))"), Invalid);
    assert_eq!(rcf("(forall ((x Elem)) (exists ((y Elem)) (lt x y)))"), Valid);
    assert_eq!(rcf("(exists ((y Elem)) (forall ((x Elem)) (lt x y)))"), Invalid);
    assert_eq!(rcf("(forall ((a Elem) (b Elem)) (exists ((x Elem)) (= (add (mul x x x) (mul a x) b) 0)))"), Valid);
    assert_eq!(rcf("(forall ((a Elem) (b Elem)) (exists ((x Elem)) (= (add (mul x x) (mul a x) b) 0)))"), Invalid);
}

#[test]
fn rcf_budget_is_reported() {
    let s = f("(forall ((a Elem) (b Elem)) (exists ((x Elem)) (= (add (mul x x x) (mul a x) b) 0)))");
    assert!(matches!(rcf_decide_bounded(&s, 10), Err(PolyError::Budget { .. })));
}

#[test]
fn quantifier_elimination_matches_discriminant() {
    let rf = sentence_to_rf(&f("(forall ((b Elem)) (exists ((x Elem)) (= (add (mul x x) b) 0)))")).unwrap();
    let Rf::Forall(bv, body) = rf else { panic!() };
    let qf = eliminate(&body, DEFAULT_NODE_BUDGET).unwrap();
    for k in -5i64..=5 {
        let val = num_rational::BigRational::from_integer(k.into());
        assert_eq!(qf.eval(&|v| if v == bv { val.clone() } else { unreachable!() }), k <= 0, "b = {}", k);
    }
}

#[test]
fn poly_arith_examples() {
    let r = PolyRing::new(&["x", "y"]);
    let p = |s: &str| MultiPoly::parse(s, &r).unwrap();
    assert_eq!(poly_arith(&p("x+y"), &p("x-y"), ArithOp::Mul).unwrap(), p("x^2-y^2"));
    assert_eq!(poly_arith(&p("x*y"), &p("0"), ArithOp::Add).unwrap(), p("x*y"));
    assert!(poly_arith(&p("(x+1)^2"), &p("x^2+2*x+1"), ArithOp::Sub).unwrap().is_zero());
}
