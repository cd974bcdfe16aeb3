//! Segment addition, multiplication and comparison by ruler constructions.
//!
//! Usage: `cargo run --example segments [a b]` with nonnegative rationals.

use num_rational::BigRational;

use geocheck::segment::{seg_add_traced, seg_inverse, seg_mul_traced, seg_trichotomy, SegmentClass, Trichotomy};

fn main() {
    let args: Vec<BigRational> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (a, b) = match args.as_slice() {
        [a, b, ..] => (a.clone(), b.clone()),
        _ => ("2/3".parse().unwrap(), "9/4".parse().unwrap()),
    };
    let a = SegmentClass::new(a).expect("nonnegative");
    let b = SegmentClass::new(b).expect("nonnegative");
    let (s, trace) = seg_add_traced(&a, &b);
    println!("{} + {} = {}\n{}", a, b, s, trace);
    let (p, trace) = seg_mul_traced(&a, &b);
    println!("{} * {} = {}\n{}", a, b, p, trace);
    if let Some(d) = seg_inverse(&a) {
        println!("1 / {} = {}", a, d);
    }
    match seg_trichotomy(&a, &b) {
        Trichotomy::Equal => println!("{} = {}", a, b),
        Trichotomy::Less(c) => println!("{} + {} = {}", a, c, b),
        Trichotomy::Greater(d) => println!("{} + {} = {}", b, d, a),
    }
}
