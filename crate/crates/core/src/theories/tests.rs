use std::collections::BTreeSet;

use super::*;
use crate::formula::{classify_fragment, parse_formula, vocab};
use crate::scheme::{apply_transduction, scheme_pp_in};
use crate::structure::{build_prime_field, check_formula, check_theory};

fn names(t: &str) -> BTreeSet<String> {
    theory_axioms(t, 0).unwrap().into_iter().map(|a| a.name).collect()
}

fn set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

#[test]
fn every_axiom_is_closed_and_classifies() {
    for n in catalog_names() {
        let a = axiom(n).unwrap();
        assert!(a.formula.is_closed(), "{}", n);
        let _ = classify_fragment(&a.formula);
    }
    for n in 0..4 {
        assert!(inf_lines(n).formula.is_closed());
    }
    assert!(printed_variant("H-4").is_some());
}

#[test]
fn theory_membership() {
    assert_eq!(names("pappus"), set(&["I-1", "I-2", "I-3", "ParAx", "InfLines(0)", "Pappus"]));
    let e = names("euclid");
    assert!(e.is_superset(&names("p-hilbert")));
    assert!(e.contains("AxE"));
    let mut owu = names("o-wu");
    owu.insert("AxSymAx".into());
    assert_eq!(names("m-wu"), owu);
    assert!(matches!(theory("projective"), Err(TheoryError::UnknownTheory(_))));
    for t in THEORY_NAMES {
        theory(t).unwrap();
    }
}

#[test]
fn symline_expansion() {
    let v = vocab::origami();
    let f = parse_formula("(forall ((P1 Point) (P2 Point) (l Line)) (SymLine P1 l P2))", &v).unwrap();
    let expected = parse_formula(
        "(forall ((P1 Point) (P2 Point) (l Line)) (exists ((Q' Point)) (and (in Q' l)
            (exists ((m' Line)) (and (in P1 m') (in Q' m') (Or m' l)))
            (exists ((m'' Line)) (and (in P2 m'') (in Q' m'') (Or m'' l)))
            (Eq P1 Q' P2 Q'))))",
        &vocab::wu(),
    )
    .unwrap();
    assert_eq!(expand_defined_relations(&f), expected);
}

#[test]
fn expansion_is_idempotent_and_conservative() {
    for n in catalog_names() {
        let a = axiom(n).unwrap().formula;
        let once = expand_defined_relations(&a);
        assert_eq!(expand_defined_relations(&once), once, "{}", n);
        let mut derived = false;
        once.visit(&mut |g| {
            if let crate::formula::Formula::Rel(r, _) = g {
                derived |= vocab::DERIVED_RELATIONS.contains(&r.as_str());
            }
        });
        assert!(!derived, "{}", n);
    }
    let plain = axiom("O-1").unwrap().formula;
    assert_eq!(expand_defined_relations(&plain), plain);
}

#[test]
fn par_expansion_agrees_on_a_plane() {
    let plane = apply_transduction(&scheme_pp_in(), &build_prime_field(3).unwrap()).unwrap();
    for n in ["ParAx", "Pappus", "De-2"] {
        let a = axiom(n).unwrap().formula;
        let direct = check_formula(&plane, &a).unwrap().0;
        if n != "De-2" {
            assert_eq!(check_formula(&plane, &expand_defined_relations(&a)).unwrap().0, direct, "{}", n);
        }
        assert!(direct, "{}", n);
    }
}

#[test]
fn small_plane_satisfies_pappus_theory() {
    let plane = apply_transduction(&scheme_pp_in(), &build_prime_field(3).unwrap()).unwrap();
    let report = check_theory(&plane, &theory("pappus").unwrap(), 2).unwrap();
    assert!(report.all_hold(), "{:?}", report);
    let (ok, cex) = check_formula(&plane, &inf_lines(3).formula).unwrap();
    assert!(!ok);
    assert!(cex.is_some());
}

#[test]
fn export_round_trip() {
    let t = theory("o-wu").unwrap();
    let text = export_theory(&t, 1);
    let back = import_theory(&text).unwrap();
    assert_eq!(back.axioms, t.instantiate(1));
    assert!(import_theory("(axiom x true)").is_err());
}
