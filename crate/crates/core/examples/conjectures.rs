//! Runs the geometry theorem checker on the bundled conjectures.
//!
//! Usage: `cargo run --release --example conjectures`

use geocheck::formula::parse_formula;
use geocheck::gtc::{run_gtc, Job, Options};
use geocheck::theories::theory;

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/conjectures");
    let cases = [
        ("altitudes", "m-wu"),
        ("isosceles", "m-wu"),
        ("all-orthogonal", "m-wu"),
        ("perpendicular-exists", "m-wu"),
        ("midpoint-between", "p-hilbert"),
    ];
    for (name, th) in cases {
        let text = std::fs::read_to_string(format!("{}/{}.sexp", dir, name)).unwrap();
        let conjecture = parse_formula(&text, &theory(th).unwrap().vocabulary).unwrap();
        let v = run_gtc(&Job { theory: th.into(), conjecture, options: Options::default() }).unwrap();
        println!("{:<22} {:<10} {:<22} kernels {:?}  {} ms", name, th, v.status.to_string(), v.kernel, v.time_ms);
        if let Some(c) = &v.counterexample {
            println!("  counterexample {:?}", c);
        }
    }
}
