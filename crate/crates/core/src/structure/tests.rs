use proptest::prelude::*;
use rand::SeedableRng;

use super::*;
use crate::formula::{parse_formula, random_sentence, vocab};
use crate::scheme::{apply_transduction, scheme_pp_in};
use crate::theories::theory;

fn ag(p: u32) -> FiniteStructure {
    apply_transduction(&scheme_pp_in(), &build_prime_field(p).unwrap()).unwrap()
}

#[test]
fn ag22_is_an_affine_plane() {
    let s = ag(2);
    assert_eq!(s.carrier_size(vocab::POINT), 4);
    assert_eq!(s.carrier_size(vocab::LINE), 6);
    let r = check_theory(&s, &theory("affine").unwrap(), 0).unwrap();
    assert!(r.all_hold(), "{:?}", r);
    // every pair of points spans a line of exactly two points
    for l in 0..6 {
        assert_eq!(s.relation("in").unwrap().with_value(1, l).len(), 2);
    }
    let f = parse_formula("(forall ((l Line)) (exists ((m Line)) (Par l m)))", &vocab::incidence()).unwrap();
    assert!(check_formula(&s, &f).unwrap().0);
}

#[test]
fn counterexample_names_the_failing_values() {
    let s = ag(2);
    let f = parse_formula("(forall ((A Point) (B Point)) (= A B))", &vocab::incidence()).unwrap();
    let (holds, cex) = check_formula(&s, &f).unwrap();
    assert!(!holds);
    let b = cex.unwrap().bindings;
    assert_eq!(b.len(), 2);
    assert_ne!(b[0].1, b[1].1);
}

#[test]
fn prime_fields_satisfy_the_field_axioms() {
    let t = field_axioms();
    for p in (2..=31u32).filter(|&p| (2..p).all(|d| p % d != 0)) {
        let r = check_theory(&build_prime_field(p).unwrap(), &t, 0).unwrap();
        assert!(r.all_hold(), "GF({p}): {:?}", r);
    }
}

#[test]
fn guarded_shapes_agree_with_naive() {
    let s = ag(3);
    let v = vocab::incidence();
    let texts = [
        "(forall ((A Point) (l Line)) (=> (in A l) (exists ((m Line)) (and (in A m) (Par l m)))))",
        "(forall ((l Line) (A Point) (B Point)) (=> (and (in A l) (in B l) (not (= A B))) (exists ((C Point)) (and (in C l) (not (= C A)) (not (= C B))))))",
        "(exists ((A Point) (l Line)) (and (in A l) (forall ((m Line)) (=> (in A m) (= m l)))))",
        "(forall ((l Line) (m Line)) (=> (Par l m) (not (exists ((P Point)) (and (in P l) (in P m))))))",
    ];
    for t in texts {
        let f = parse_formula(t, &v).unwrap();
        let a = Assignment::new();
        assert_eq!(eval_formula(&s, &f, &a).unwrap(), eval_naive(&s, &f, &a).unwrap(), "{}", t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn guarded_and_naive_evaluation_agree(seed in any::<u64>(), size in 1usize..10) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = random_sentence(&vocab::incidence(), 3, size, &mut rng);
        let s = ag(2);
        let a = Assignment::new();
        prop_assert_eq!(eval_formula(&s, &f, &a).unwrap(), eval_naive(&s, &f, &a).unwrap(), "{}", f);
    }
}
