//! Checks the incidence axioms, Pappus and Desargues on small analytic planes.
//!
//! Usage: `cargo run --release --example axioms_on_planes [q ...]`

use std::time::Instant;

use geocheck::scheme::{apply_transduction, scheme_pp_in};
use geocheck::structure::{build_prime_field, check_formula, load_cayley_field};
use geocheck::theories::axiom;

const GF4: &str = include_str!("../data/gf4.cayley");

fn main() {
    let qs: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let qs = if qs.is_empty() { vec![2, 3, 4, 5] } else { qs };
    for q in qs {
        let field = if q == 4 { load_cayley_field(GF4) } else { build_prime_field(q) }.expect("field of order q");
        let plane = apply_transduction(&scheme_pp_in(), &field).expect("analytic plane");
        let start = Instant::now();
        print!("AG(2,{q}):");
        for name in ["I-1", "I-2", "I-3", "ParAx", "Pappus", "De-1", "De-2"] {
            let t = Instant::now();
            let (holds, cex) = check_formula(&plane, &axiom(name).unwrap().formula).unwrap();
            print!(" {name}={}({} ms)", if holds { "ok" } else { "FAIL" }, t.elapsed().as_millis());
            if let Some(c) = cex {
                print!(" {:?}", c.bindings);
            }
        }
        println!("  total {} ms", start.elapsed().as_millis());
    }
}
