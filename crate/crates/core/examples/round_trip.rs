//! Coordinatizes PP_in(F) for small fields and recovers F up to isomorphism.
//!
//! Usage: `cargo run --release --example round_trip [p ...]`

use geocheck::ptr::round_trip_check;
use geocheck::structure::{build_prime_field, load_cayley_field};

const GF4: &str = include_str!("../data/gf4.cayley");

fn main() {
    let ps: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut fields: Vec<(String, _)> = if ps.is_empty() { vec![2, 3, 5, 7, 11] } else { ps }
        .into_iter()
        .map(|p| (format!("GF({})", p), build_prime_field(p).expect("prime order")))
        .collect();
    fields.push(("GF(4)".into(), load_cayley_field(GF4).unwrap()));
    for (name, f) in fields {
        let r = round_trip_check(&f).expect("coordinatization");
        println!(
            "{:<7} {:>3} points {:>3} lines  PTR axioms {}  iota {:?}  plane iso {}",
            name,
            r.points,
            r.lines,
            if r.ptr_axioms.all_hold() { "ok" } else { "FAIL" },
            r.field_isomorphism,
            r.plane_isomorphism
        );
    }
}
