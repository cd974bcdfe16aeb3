//! Translates a Hilbert-plane sentence into the language of ordered fields
//! and checks the translation against the transduced plane over GF(3).

use geocheck::formula::{parse_formula, pretty, vocab};
use geocheck::scheme::{apply_transduction, fundamental_property_check, scheme_pp_hilbert, scheme_pp_in, translate_formula};
use geocheck::structure::build_prime_field;

fn main() {
    let theta = parse_formula(
        "(forall ((A Point) (B Point) (C Point)) (=> (Be A B C) (not (Be B A C))))",
        &vocab::hilbert(),
    )
    .unwrap();
    println!("{}\n", pretty(&translate_formula(&scheme_pp_hilbert(), &theta).unwrap()));

    let phi = scheme_pp_in();
    let f = build_prime_field(3).unwrap();
    let plane = apply_transduction(&phi, &f).unwrap();
    println!("PP_in(GF(3)): {} points, {} lines", plane.carrier_size(vocab::POINT), plane.carrier_size(vocab::LINE));
    let par = parse_formula("(forall ((l Line)) (exists ((m Line)) (Par l m)))", &vocab::incidence()).unwrap();
    println!("every line has a parallel: translation agrees = {}", fundamental_property_check(&phi, &f, &par).unwrap());
}
