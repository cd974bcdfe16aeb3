//! Translation schemes: the induced transduction on finite structures and
//! the induced translation on formulas.

mod line;
mod pp;
mod serial;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::formula::{Formula, FormulaError, Term, Var, Vocabulary};
use crate::structure::{eval_formula, Assignment, Compiled, FiniteStructure, StructureError};

pub use line::{normalize_line, FieldOps, LineError, Rationals};
pub use pp::{scheme_by_name, scheme_pp_hilbert, scheme_pp_in, scheme_pp_wu};
pub use serial::{scheme_from_sexpr, scheme_to_sexpr};

pub const DEFAULT_TRANSDUCTION_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("transduction budget exceeded: {needed} tuples needed, budget {budget}")]
    Budget { needed: u64, budget: u64 },
    #[error("vocabulary mismatch: {0}")]
    Vocabulary(String),
    #[error("ill-formed scheme: {0}")]
    Malformed(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// How one target sort is represented by tuples of source elements.
#[derive(Debug, Clone, PartialEq)]
pub struct SortDef {
    pub sort: String,
    pub components: Vec<Var>,
    pub universe: Formula,
    /// Equality on representatives, over two copies of the components.
    pub equality: Option<(Vec<Var>, Vec<Var>, Formula)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelDef {
    pub name: String,
    /// One component list per argument position.
    pub params: Vec<Vec<Var>>,
    pub formula: Formula,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TranslationScheme {
    pub name: String,
    pub source: Vocabulary,
    pub target: Vocabulary,
    pub sorts: Vec<SortDef>,
    pub relations: Vec<RelDef>,
}

impl TranslationScheme {
    pub fn sort_def(&self, sort: &str) -> Option<&SortDef> {
        self.sorts.iter().find(|d| d.sort == sort)
    }

    pub fn rel_def(&self, name: &str) -> Option<&RelDef> {
        self.relations.iter().find(|d| d.name == name)
    }

    pub fn dimension(&self, sort: &str) -> Option<usize> {
        self.sort_def(sort).map(|d| d.components.len())
    }

    pub fn is_quantifier_free(&self) -> bool {
        self.sorts.iter().all(|d| {
            d.universe.is_quantifier_free() && d.equality.as_ref().is_none_or(|(_, _, f)| f.is_quantifier_free())
        }) && self.relations.iter().all(|r| r.formula.is_quantifier_free())
    }

    /// Checks arities and free variables of all defining formulas.
    pub fn validate(&self) -> Result<(), SchemeError> {
        let bad = |m: String| Err(SchemeError::Malformed(m));
        for s in &self.target.sorts {
            if self.sort_def(s.as_str()).is_none() {
                return bad(format!("no definition for target sort {}", s));
            }
        }
        let within = |f: &Formula, allowed: &[&Var]| f.free_variables().iter().all(|v| allowed.contains(&v));
        for d in &self.sorts {
            if d.components.is_empty() {
                return bad(format!("sort {} has dimension 0", d.sort));
            }
            if !within(&d.universe, &d.components.iter().collect::<Vec<_>>()) {
                return bad(format!("universe formula of {} has stray free variables", d.sort));
            }
            if let Some((l, r, f)) = &d.equality {
                if l.len() != d.components.len() || r.len() != d.components.len() {
                    return bad(format!("equality of {} has the wrong arity", d.sort));
                }
                if !within(f, &l.iter().chain(r).collect::<Vec<_>>()) {
                    return bad(format!("equality formula of {} has stray free variables", d.sort));
                }
            }
        }
        for r in &self.target.relations {
            let Some(def) = self.rel_def(&r.name) else {
                return bad(format!("no definition for target relation {}", r.name));
            };
            if def.params.len() != r.args.len() {
                return bad(format!("relation {} defined with {} arguments", r.name, def.params.len()));
            }
            for (p, s) in def.params.iter().zip(&r.args) {
                if Some(p.len()) != self.dimension(s.as_str()) {
                    return bad(format!("argument of {} does not match the dimension of {}", r.name, s));
                }
            }
            if !within(&def.formula, &def.params.iter().flatten().collect::<Vec<_>>()) {
                return bad(format!("definition of {} has stray free variables", r.name));
            }
        }
        Ok(())
    }
}

/// Name of the `i`-th component variable standing for target variable `v`.
pub fn component_name(v: &str, comp: &Var) -> String {
    format!("{}.{}", v, comp.name)
}

fn components_of(def: &SortDef, v: &str) -> Vec<Var> {
    def.components.iter().map(|c| Var::new(component_name(v, c), &c.sort)).collect()
}

fn bind(params: &[Var], args: &[Var], map: &mut BTreeMap<String, Term>) {
    for (p, a) in params.iter().zip(args) {
        map.insert(p.name.clone(), Term::Var(a.clone()));
    }
}

/// The translation of a formula over the target vocabulary into one over the source.
pub fn translate_formula(phi: &TranslationScheme, theta: &Formula) -> Result<Formula, SchemeError> {
    Ok(match theta {
        Formula::True | Formula::False => theta.clone(),
        Formula::Eq(a, b) => {
            let (Term::Var(x), Term::Var(y)) = (a, b) else {
                return Err(SchemeError::Vocabulary("only variables may be equated in the target".into()));
            };
            let def = phi.sort_def(x.sort.as_str()).ok_or_else(|| SchemeError::Vocabulary(format!("sort {}", x.sort)))?;
            let (cx, cy) = (components_of(def, &x.name), components_of(def, &y.name));
            match &def.equality {
                Some((l, r, f)) => {
                    let mut m = BTreeMap::new();
                    bind(l, &cx, &mut m);
                    bind(r, &cy, &mut m);
                    f.substitute(&m)
                }
                None => Formula::and(
                    cx.into_iter().zip(cy).map(|(p, q)| Formula::eq(Term::Var(p), Term::Var(q))).collect(),
                ),
            }
        }
        Formula::Rel(r, args) => {
            let def = phi.rel_def(r).ok_or_else(|| SchemeError::Vocabulary(format!("relation {} has no definition", r)))?;
            let mut m = BTreeMap::new();
            for (p, a) in def.params.iter().zip(args) {
                let Term::Var(x) = a else {
                    return Err(SchemeError::Vocabulary(format!("argument {} of {} is not a variable", a, r)));
                };
                let sd = phi.sort_def(x.sort.as_str()).ok_or_else(|| SchemeError::Vocabulary(format!("sort {}", x.sort)))?;
                bind(p, &components_of(sd, &x.name), &mut m);
            }
            def.formula.substitute(&m)
        }
        Formula::Not(g) => Formula::not(translate_formula(phi, g)?),
        Formula::And(gs) => Formula::And(gs.iter().map(|g| translate_formula(phi, g)).collect::<Result<_, _>>()?),
        Formula::Or(gs) => Formula::Or(gs.iter().map(|g| translate_formula(phi, g)).collect::<Result<_, _>>()?),
        Formula::Implies(a, b) => Formula::implies(translate_formula(phi, a)?, translate_formula(phi, b)?),
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let def = phi.sort_def(v.sort.as_str()).ok_or_else(|| SchemeError::Vocabulary(format!("sort {}", v.sort)))?;
            let comps = components_of(def, &v.name);
            let mut m = BTreeMap::new();
            bind(&def.components, &comps, &mut m);
            let universe = def.universe.substitute(&m);
            let body = translate_formula(phi, g)?;
            if matches!(theta, Formula::Forall(..)) {
                let inner = if universe == Formula::True { body } else { Formula::implies(universe, body) };
                Formula::forall_many(comps, inner)
            } else {
                let inner = if universe == Formula::True { body } else { Formula::and(vec![universe, body]) };
                Formula::exists_many(comps, inner)
            }
        }
    })
}

fn product(sizes: &[usize]) -> impl Iterator<Item = Vec<u32>> + '_ {
    let total: usize = sizes.iter().product();
    (0..total).map(move |mut i| {
        let mut t = vec![0u32; sizes.len()];
        for k in (0..sizes.len()).rev() {
            t[k] = (i % sizes[k]) as u32;
            i /= sizes[k];
        }
        t
    })
}

/// The tuples representing one target element, in source ids.
#[derive(Debug, Clone)]
pub struct Transduced {
    pub structure: FiniteStructure,
    /// Representative source tuple of every target element, per sort.
    pub representatives: BTreeMap<String, Vec<Vec<u32>>>,
}

impl Transduced {
    /// The target element represented by `tuple`, if any.
    pub fn element_of(&self, phi: &TranslationScheme, source: &FiniteStructure, sort: &str, tuple: &[u32]) -> Result<Option<u32>, SchemeError> {
        let def = phi.sort_def(sort).ok_or_else(|| SchemeError::Vocabulary(sort.into()))?;
        let reps = &self.representatives[sort];
        match &def.equality {
            None => Ok(reps.iter().position(|r| r == tuple).map(|i| i as u32)),
            Some((l, r, f)) => {
                let free: Vec<Var> = l.iter().chain(r).cloned().collect();
                let c = Compiled::new(source, f, &free)?;
                let mut buf = tuple.to_vec();
                buf.resize(l.len() * 2, 0);
                for (i, rep) in reps.iter().enumerate() {
                    buf[l.len()..].copy_from_slice(rep);
                    if c.eval(&buf) {
                        return Ok(Some(i as u32));
                    }
                }
                Ok(None)
            }
        }
    }
}

pub fn apply_transduction(phi: &TranslationScheme, s: &FiniteStructure) -> Result<FiniteStructure, SchemeError> {
    Ok(transduce(phi, s, DEFAULT_TRANSDUCTION_BUDGET)?.structure)
}

/// The transduction with an explicit bound on the number of enumerated tuples.
pub fn transduce(phi: &TranslationScheme, s: &FiniteStructure, budget: u64) -> Result<Transduced, SchemeError> {
    for sym in &phi.source.relations {
        if s.vocabulary().relation(&sym.name).is_none() {
            return Err(SchemeError::Vocabulary(format!("source structure lacks relation {}", sym.name)));
        }
    }
    for sym in &phi.source.functions {
        if !s.has_function(&sym.name) {
            return Err(SchemeError::Vocabulary(format!("source structure lacks function {}", sym.name)));
        }
    }
    let mut spent = 0u64;
    let mut charge = |n: u64| -> Result<(), SchemeError> {
        spent = spent.saturating_add(n);
        if spent > budget {
            Err(SchemeError::Budget { needed: spent, budget })
        } else {
            Ok(())
        }
    };
    let mut out = FiniteStructure::new(phi.target.clone());
    let mut reps: BTreeMap<String, Vec<Vec<u32>>> = BTreeMap::new();
    for d in &phi.sorts {
        let sizes: Vec<usize> = d.components.iter().map(|c| s.carrier_size(c.sort.as_str())).collect();
        charge(sizes.iter().map(|&x| x as u64).product())?;
        let universe = Compiled::new(s, &d.universe, &d.components)?;
        let members: Vec<Vec<u32>> = product(&sizes).filter(|t| universe.eval(t)).collect();
        let classes = match &d.equality {
            None => members,
            Some((l, r, f)) => {
                let free: Vec<Var> = l.iter().chain(r).cloned().collect();
                let eq = Compiled::new(s, f, &free)?;
                let mut classes: Vec<Vec<u32>> = Vec::new();
                let mut buf = vec![0u32; 2 * l.len()];
                for t in members {
                    buf[..l.len()].copy_from_slice(&t);
                    let known = classes.iter().any(|rep| {
                        buf[l.len()..].copy_from_slice(rep);
                        eq.eval(&buf)
                    });
                    if !known {
                        classes.push(t);
                    }
                }
                classes
            }
        };
        out.set_carrier(&d.sort, classes.len())?;
        let names = classes
            .iter()
            .map(|t| {
                let parts: Vec<String> =
                    t.iter().zip(&d.components).map(|(v, c)| s.name_of(c.sort.as_str(), *v)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        out.set_names(&d.sort, names)?;
        reps.insert(d.sort.clone(), classes);
    }
    for sym in &phi.target.relations {
        let def = phi.rel_def(&sym.name).ok_or_else(|| SchemeError::Malformed(format!("no definition for {}", sym.name)))?;
        let free: Vec<Var> = def.params.iter().flatten().cloned().collect();
        let c = Compiled::new(s, &def.formula, &free)?;
        let sizes: Vec<usize> = sym.args.iter().map(|a| reps[a.as_str()].len()).collect();
        charge(sizes.iter().map(|&x| x as u64).product())?;
        out.touch_relation(&sym.name)?;
        let mut buf = Vec::with_capacity(free.len());
        for t in product(&sizes) {
            buf.clear();
            for (v, a) in t.iter().zip(&sym.args) {
                buf.extend_from_slice(&reps[a.as_str()][*v as usize]);
            }
            if c.eval(&buf) {
                out.insert(&sym.name, t)?;
            }
        }
    }
    Ok(Transduced { structure: out, representatives: reps })
}

/// Compares truth of the translation in `s` with truth of `theta` in the transduced structure.
pub fn fundamental_property_check(phi: &TranslationScheme, s: &FiniteStructure, theta: &Formula) -> Result<bool, SchemeError> {
    let image = apply_transduction(phi, s)?;
    fundamental_property_on(phi, s, &image, theta)
}

/// Like [`fundamental_property_check`] with a precomputed transduction image.
pub fn fundamental_property_on(
    phi: &TranslationScheme,
    s: &FiniteStructure,
    image: &FiniteStructure,
    theta: &Formula,
) -> Result<bool, SchemeError> {
    let translated = translate_formula(phi, theta)?;
    let left = eval_formula(s, &translated, &Assignment::new())?;
    let right = eval_formula(image, theta, &Assignment::new())?;
    Ok(left == right)
}
