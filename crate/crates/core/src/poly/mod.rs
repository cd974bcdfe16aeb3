//! Exact polynomial arithmetic and the two decision kernels: Gröbner bases
//! for algebraically closed fields of characteristic 0 and Cohen–Hörmander
//! quantifier elimination for real closed fields.

mod acf;
mod cohen_hormander;
mod convert;
mod groebner;
mod multi;
pub mod rpoly;

use serde::Serialize;

pub use acf::{acf0_decide, acf0_decide_bounded, acf0_decide_universal, acf0_decide_universal_bounded, negated_disjuncts, satisfiable_over_c, Disjunct};
pub use cohen_hormander::{
    eliminate, rcf_decide, rcf_decide_bounded, sentence_to_rf, Qf, Rel, Rf, Sign, DEFAULT_NODE_BUDGET,
};
pub use convert::{eval_closed_rational, eval_qf_rational, eval_term_rational, term_to_poly};
pub use groebner::{
    groebner_basis, groebner_basis_bounded, ideal_membership, normal_form, s_polynomial, GroebnerBasis,
    DEFAULT_PAIR_BUDGET,
};
pub use multi::{Monomial, MonomialOrder, MultiPoly, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live in different variable contexts")]
    Context,
    #[error("polynomial syntax: {0}")]
    Parse(String),
    #[error("{what} exceeded its budget of {limit}")]
    Budget { what: &'static str, limit: usize },
    #[error("outside the decided fragment: {0}")]
    Fragment(String),
    #[error("division must be cleared before polynomial conversion")]
    Division,
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("internal: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Valid,
    Invalid,
}

/// Arithmetic selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &MultiPoly, q: &MultiPoly, op: ArithOp) -> Result<MultiPoly, PolyError> {
    match op {
        ArithOp::Add => p.try_add(q),
        ArithOp::Sub => p.try_sub(q),
        ArithOp::Mul => p.try_mul(q),
    }
}

#[cfg(test)]
mod tests;
