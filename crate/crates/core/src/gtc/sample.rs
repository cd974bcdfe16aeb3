use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::{clear_divisions, prenex, Formula, Quantifier};
use crate::poly::eval_qf_rational;

#[derive(Debug, Clone)]
pub struct SampleOptions {
    pub points: usize,
    /// Bound on numerators and denominators.
    pub height: i64,
    pub seed: u64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { points: 1000, height: 10, seed: 7 }
    }
}

/// Searches rational points of bounded height for a falsifying assignment
/// of a universal sentence.
pub fn find_counterexample(f: &Formula, opts: &SampleOptions) -> Option<BTreeMap<String, String>> {
    let f = clear_divisions(f).ok()?;
    let (prefix, matrix) = prenex(&f);
    if prefix.iter().any(|(q, _)| *q != Quantifier::Forall) {
        return None;
    }
    let mut names: Vec<String> = prefix.into_iter().map(|(_, v)| v.name).collect();
    names.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let h = opts.height.max(1);
    for _ in 0..opts.points {
        let env: BTreeMap<String, BigRational> = names
            .iter()
            .map(|n| {
                let num = rng.gen_range(-h..=h);
                let den = rng.gen_range(1..=h);
                (n.clone(), BigRational::new(BigInt::from(num), BigInt::from(den)))
            })
            .collect();
        if let Ok(false) = eval_qf_rational(&matrix, &env) {
            return Some(env.into_iter().map(|(k, v)| (k, v.to_string())).collect());
        }
    }
    None
}
