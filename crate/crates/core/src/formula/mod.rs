//! Multi-sorted first-order syntax: vocabularies, terms, formulas, the
//! s-expression surface syntax, normal forms and fragment classification.

mod ast;
mod divisions;
mod fragment;
mod parse;
mod print;
mod random;
pub mod sexpr;
mod theory;
pub mod vocab;

use thiserror::Error;

pub use ast::{fresh_name, Formula, Quantifier, Term, Var};
pub use divisions::{clear_divisions, clear_divisions_bounded, DEFAULT_INVERSE_DEPTH};
pub use fragment::{classify_fragment, nnf, prenex, quantifier_blocks, FragmentClass};
pub use parse::{formula_from_sexpr, parse_formula, parse_formula_with, parse_term};
#[allow(unused_imports)]
pub(crate) use parse::parse_numeral;
pub use print::pretty;
pub use random::random_sentence;
pub use theory::{AxiomScheme, NamedAxiom, Theory};
pub use vocab::{Sort, Vocabulary};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FormulaError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("sort error at `{symbol}`: {msg}")]
    Sort { symbol: String, msg: String },
    #[error("inverse nesting depth {depth} exceeds the bound {bound}")]
    NestingDepth { depth: usize, bound: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl FormulaError {
    pub(crate) fn sort(symbol: &str, msg: impl Into<String>) -> Self {
        FormulaError::Sort { symbol: symbol.to_string(), msg: msg.into() }
    }
}

/// The set of free variables of a formula.
pub fn free_variables(f: &Formula) -> std::collections::BTreeSet<Var> {
    f.free_variables()
}

/// Capture-avoiding simultaneous substitution.
pub fn substitute(f: &Formula, map: &std::collections::BTreeMap<String, Term>) -> Formula {
    f.substitute(map)
}
