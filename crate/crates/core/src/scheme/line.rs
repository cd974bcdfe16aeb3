use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::structure::FiniteStructure;

/// Field operations on some element representation.
pub trait FieldOps {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool {
        *a == self.zero()
    }
}

pub struct Rationals;

impl FieldOps for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
}

/// A finite structure with field tables, elements given by id.
impl FieldOps for FiniteStructure {
    type E = u32;
    fn zero(&self) -> u32 {
        self.units().expect("field structure").0
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.apply("mul", &[*a, *b]).expect("mul table")
    }
    fn inv(&self, a: &u32) -> u32 {
        self.apply("inv", &[*a]).expect("inv table")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("degenerate line triple: a and b are both zero")]
pub struct LineError;

/// Scales a line triple so that its first nonzero coefficient among `a, b` is one.
pub fn normalize_line<F: FieldOps>(f: &F, t: [F::E; 3]) -> Result<[F::E; 3], LineError> {
    let pivot = if !f.is_zero(&t[0]) {
        &t[0]
    } else if !f.is_zero(&t[1]) {
        &t[1]
    } else {
        return Err(LineError);
    };
    let k = f.inv(pivot);
    Ok([f.mul(&k, &t[0]), f.mul(&k, &t[1]), f.mul(&k, &t[2])])
}
