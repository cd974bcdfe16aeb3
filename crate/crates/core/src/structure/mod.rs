//! Finite multi-sorted structures and a first-order model checker.

mod check;
mod eval;
mod fields;

use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::formula::{FormulaError, Vocabulary};

pub use check::{
    check_formula, check_theory, AxiomResult, CheckReport, Counterexample,
};
pub use eval::{eval_formula, eval_naive, Assignment, Compiled};
pub use fields::{
    build_prime_field, build_prime_field_bounded, field_axioms, field_from_tables, load_cayley_field,
    parse_cayley, verify_field_tables, FieldAxiomViolation,
    DEFAULT_PRIME_BOUND,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StructureError {
    #[error("unknown sort `{0}`")]
    UnknownSort(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("tuple for `{symbol}` is ill-sorted or out of range: {tuple:?}")]
    BadTuple { symbol: String, tuple: Vec<u32> },
    #[error("function table for `{0}` has the wrong size")]
    BadTable(String),
    #[error("free variable `{0}` has no value")]
    Unassigned(String),
    #[error("numeral {0} has no value in this structure")]
    Numeral(String),
    #[error("vocabulary mismatch: {0}")]
    Vocabulary(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("{0}")]
    Input(String),
    #[error("field axiom `{}` fails at {:?}", .0.axiom, .0.witness)]
    NotAField(FieldAxiomViolation),
}

/// A relation table with one index per argument position.
#[derive(Debug, Clone)]
pub struct Relation {
    sizes: Vec<u32>,
    tuples: Vec<Vec<u32>>,
    dense: Option<Vec<u64>>,
    sparse: HashSet<Vec<u32>>,
    index: Vec<Vec<Vec<u32>>>,
}

const DENSE_LIMIT: u64 = 1 << 24;

impl Relation {
    fn new(sizes: Vec<u32>) -> Self {
        let cells: u64 = sizes.iter().map(|&s| s as u64).product();
        let dense = (cells <= DENSE_LIMIT).then(|| vec![0u64; (cells as usize + 63) / 64]);
        let index = sizes.iter().map(|&s| vec![Vec::new(); s as usize]).collect();
        Relation { sizes, tuples: Vec::new(), dense, sparse: HashSet::new(), index }
    }

    fn offset(&self, t: &[u32]) -> usize {
        let mut off = 0usize;
        for (v, s) in t.iter().zip(&self.sizes) {
            off = off * *s as usize + *v as usize;
        }
        off
    }

    pub fn contains(&self, t: &[u32]) -> bool {
        match &self.dense {
            Some(bits) => {
                let o = self.offset(t);
                bits[o / 64] >> (o % 64) & 1 == 1
            }
            None => self.sparse.contains(t),
        }
    }

    fn insert(&mut self, t: Vec<u32>) {
        if self.contains(&t) {
            return;
        }
        match &mut self.dense {
            Some(_) => {
                let o = self.offset(&t);
                self.dense.as_mut().unwrap()[o / 64] |= 1 << (o % 64);
            }
            None => {
                self.sparse.insert(t.clone());
            }
        }
        let id = self.tuples.len() as u32;
        for (pos, v) in t.iter().enumerate() {
            self.index[pos][*v as usize].push(id);
        }
        self.tuples.push(t);
    }

    pub fn tuples(&self) -> &[Vec<u32>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Ids of the tuples whose `pos`-th entry is `v`.
    pub fn with_value(&self, pos: usize, v: u32) -> &[u32] {
        &self.index[pos][v as usize]
    }

    pub fn tuple(&self, id: u32) -> &[u32] {
        &self.tuples[id as usize]
    }
}

#[derive(Debug, Clone)]
struct FnTable {
    sizes: Vec<u32>,
    values: Vec<u32>,
}

impl FnTable {
    fn get(&self, args: &[u32]) -> u32 {
        let mut off = 0usize;
        for (v, s) in args.iter().zip(&self.sizes) {
            off = off * *s as usize + *v as usize;
        }
        self.values[off]
    }
}

/// Elements are dense ids `0..n` per sort; names are kept for printing.
#[derive(Debug, Clone)]
pub struct FiniteStructure {
    vocab: Vocabulary,
    carriers: BTreeMap<String, u32>,
    names: BTreeMap<String, Vec<String>>,
    relations: BTreeMap<String, Relation>,
    functions: BTreeMap<String, FnTable>,
    constants: BTreeMap<String, u32>,
    /// Zero and one of a field structure, used to interpret numerals.
    units: Option<(u32, u32)>,
}

impl FiniteStructure {
    pub fn new(vocab: Vocabulary) -> Self {
        let carriers = vocab.sorts.iter().map(|s| (s.0.clone(), 0)).collect();
        FiniteStructure {
            vocab,
            carriers,
            names: BTreeMap::new(),
            relations: BTreeMap::new(),
            functions: BTreeMap::new(),
            constants: BTreeMap::new(),
            units: None,
        }
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    /// Sets the carrier size of a sort. Must precede any table for it.
    pub fn set_carrier(&mut self, sort: &str, size: usize) -> Result<(), StructureError> {
        let slot = self.carriers.get_mut(sort).ok_or_else(|| StructureError::UnknownSort(sort.into()))?;
        *slot = size as u32;
        Ok(())
    }

    pub fn set_names(&mut self, sort: &str, names: Vec<String>) -> Result<(), StructureError> {
        if self.carrier_size(sort) != names.len() {
            return Err(StructureError::Input(format!("{} names for a carrier of size {}", names.len(), self.carrier_size(sort))));
        }
        self.names.insert(sort.into(), names);
        Ok(())
    }

    pub fn carrier_size(&self, sort: &str) -> usize {
        self.carriers.get(sort).copied().unwrap_or(0) as usize
    }

    pub fn name_of(&self, sort: &str, id: u32) -> String {
        match self.names.get(sort) {
            Some(ns) => ns[id as usize].clone(),
            None => id.to_string(),
        }
    }

    fn sizes_of(&self, sorts: &[crate::formula::Sort]) -> Vec<u32> {
        sorts.iter().map(|s| self.carrier_size(s.as_str()) as u32).collect()
    }

    pub fn insert(&mut self, rel: &str, tuple: Vec<u32>) -> Result<(), StructureError> {
        let sym = self.vocab.relation(rel).ok_or_else(|| StructureError::UnknownSymbol(rel.into()))?;
        let sizes = self.sizes_of(&sym.args);
        if tuple.len() != sizes.len() || tuple.iter().zip(&sizes).any(|(v, s)| v >= s) {
            return Err(StructureError::BadTuple { symbol: rel.into(), tuple });
        }
        self.relations.entry(rel.to_string()).or_insert_with(|| Relation::new(sizes)).insert(tuple);
        Ok(())
    }

    /// Declares a relation as present, even when empty.
    pub fn touch_relation(&mut self, rel: &str) -> Result<(), StructureError> {
        let sym = self.vocab.relation(rel).ok_or_else(|| StructureError::UnknownSymbol(rel.into()))?;
        let sizes = self.sizes_of(&sym.args);
        self.relations.entry(rel.to_string()).or_insert_with(|| Relation::new(sizes));
        Ok(())
    }

    pub fn holds(&self, rel: &str, tuple: &[u32]) -> bool {
        self.relations.get(rel).is_some_and(|r| r.contains(tuple))
    }

    pub fn relation(&self, rel: &str) -> Option<&Relation> {
        self.relations.get(rel)
    }

    pub fn has_relation(&self, rel: &str) -> bool {
        self.relations.contains_key(rel)
    }

    /// Installs a total function table, indexed in row-major order of the arguments.
    /// Variadic symbols take a binary table.
    pub fn set_function(&mut self, name: &str, values: Vec<u32>) -> Result<(), StructureError> {
        let sym = self.vocab.function(name).ok_or_else(|| StructureError::UnknownSymbol(name.into()))?.clone();
        let arg_sorts = if sym.variadic { vec![sym.args[0].clone(), sym.args[0].clone()] } else { sym.args.clone() };
        let sizes = self.sizes_of(&arg_sorts);
        let cells: usize = sizes.iter().map(|&s| s as usize).product();
        let bound = self.carrier_size(sym.result.as_str()) as u32;
        if values.len() != cells || values.iter().any(|&v| v >= bound) {
            return Err(StructureError::BadTable(name.into()));
        }
        self.functions.insert(name.into(), FnTable { sizes, values });
        Ok(())
    }

    pub fn has_function(&self, name: &str) -> bool {
        self.functions.contains_key(name)
    }

    pub fn apply(&self, name: &str, args: &[u32]) -> Option<u32> {
        let t = self.functions.get(name)?;
        if t.sizes.len() == 2 && args.len() > 2 {
            return Some(args[1..].iter().fold(args[0], |acc, &b| t.get(&[acc, b])));
        }
        Some(t.get(args))
    }

    pub fn set_constant(&mut self, name: &str, id: u32) -> Result<(), StructureError> {
        let sort = self.vocab.constant(name).ok_or_else(|| StructureError::UnknownSymbol(name.into()))?;
        if id as usize >= self.carrier_size(sort.as_str()) {
            return Err(StructureError::BadTuple { symbol: name.into(), tuple: vec![id] });
        }
        self.constants.insert(name.into(), id);
        Ok(())
    }

    pub fn constant(&self, name: &str) -> Option<u32> {
        self.constants.get(name).copied()
    }

    pub fn set_units(&mut self, zero: u32, one: u32) {
        self.units = Some((zero, one));
    }

    pub fn units(&self) -> Option<(u32, u32)> {
        self.units
    }

    /// The element denoted by a rational numeral, computed with the
    /// structure's own `add`, `neg`, `mul` and `inv` tables.
    pub fn numeral(&self, r: &BigRational) -> Option<u32> {
        let (zero, one) = self.units?;
        let embed = |n: &num_bigint::BigInt| -> Option<u32> {
            let k = n.abs().to_u64()?;
            let mut acc = zero;
            // characteristic is small, so reduce k by the additive order of 1
            let mut order = 0u64;
            let mut x = zero;
            loop {
                x = self.apply("add", &[x, one])?;
                order += 1;
                if x == zero || order > k {
                    break;
                }
            }
            let steps = if x == zero { k % order } else { k };
            for _ in 0..steps {
                acc = self.apply("add", &[acc, one])?;
            }
            if n.is_negative() {
                acc = self.apply("neg", &[acc])?;
            }
            Some(acc)
        };
        let n = embed(r.numer())?;
        if r.denom().is_one() {
            return Some(n);
        }
        let d = embed(r.denom())?;
        if d == zero {
            return None;
        }
        let di = self.apply("inv", &[d])?;
        self.apply("mul", &[n, di])
    }
}

#[cfg(test)]
mod tests;
