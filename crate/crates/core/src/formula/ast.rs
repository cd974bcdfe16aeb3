use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;

use super::vocab::{Sort, Vocabulary};
use super::FormulaError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub name: String,
    pub sort: Sort,
}

impl Var {
    pub fn new(name: impl Into<String>, sort: &Sort) -> Self {
        Var { name: name.into(), sort: sort.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Const(String),
    Num(BigRational),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: &str, sort: &Sort) -> Term {
        Term::Var(Var::new(name, sort))
    }

    pub fn int(n: i64) -> Term {
        Term::Num(BigRational::from_integer(n.into()))
    }

    pub fn app(f: &str, args: Vec<Term>) -> Term {
        Term::App(f.to_string(), args)
    }

    /// Sort of the term relative to a vocabulary.
    pub fn sort(&self, vocab: &Vocabulary) -> Result<Sort, FormulaError> {
        match self {
            Term::Var(v) => Ok(v.sort.clone()),
            Term::Const(c) => vocab
                .constant(c)
                .cloned()
                .ok_or_else(|| FormulaError::sort(c, "unknown constant")),
            Term::Num(n) => vocab
                .numeric
                .clone()
                .ok_or_else(|| FormulaError::sort(&n.to_string(), "vocabulary has no numerals")),
            Term::App(f, _) => vocab
                .function(f)
                .map(|s| s.result.clone())
                .ok_or_else(|| FormulaError::sort(f, "unknown function")),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
            Term::Const(_) | Term::Num(_) => {}
        }
    }

    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Term::Var(v) => v.name == name,
            Term::App(_, args) => args.iter().any(|a| a.mentions(name)),
            _ => false,
        }
    }

    pub fn uses_function(&self, f: &str) -> bool {
        match self {
            Term::App(g, args) => g == f || args.iter().any(|a| a.uses_function(f)),
            _ => false,
        }
    }

    pub fn substitute(&self, map: &BTreeMap<String, Term>) -> Term {
        match self {
            Term::Var(v) => map.get(&v.name).cloned().unwrap_or_else(|| self.clone()),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| a.substitute(map)).collect()),
            _ => self.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    pub fn dual(self) -> Quantifier {
        match self {
            Quantifier::Forall => Quantifier::Exists,
            Quantifier::Exists => Quantifier::Forall,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Eq(Term, Term),
    Rel(String, Vec<Term>),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn rel(name: &str, args: Vec<Term>) -> Formula {
        Formula::Rel(name.to_string(), args)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(fs: Vec<Formula>) -> Formula {
        match fs.len() {
            0 => Formula::True,
            1 => fs.into_iter().next().unwrap(),
            _ => Formula::And(fs),
        }
    }

    pub fn or(fs: Vec<Formula>) -> Formula {
        match fs.len() {
            0 => Formula::False,
            1 => fs.into_iter().next().unwrap(),
            _ => Formula::Or(fs),
        }
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(v: Var, body: Formula) -> Formula {
        Formula::Forall(v, Box::new(body))
    }

    pub fn exists(v: Var, body: Formula) -> Formula {
        Formula::Exists(v, Box::new(body))
    }

    pub fn quant(q: Quantifier, v: Var, body: Formula) -> Formula {
        match q {
            Quantifier::Forall => Formula::forall(v, body),
            Quantifier::Exists => Formula::exists(v, body),
        }
    }

    /// Binds `vars` outermost-first.
    pub fn forall_many(vars: Vec<Var>, body: Formula) -> Formula {
        vars.into_iter().rev().fold(body, |acc, v| Formula::forall(v, acc))
    }

    pub fn exists_many(vars: Vec<Var>, body: Formula) -> Formula {
        vars.into_iter().rev().fold(body, |acc, v| Formula::exists(v, acc))
    }

    pub fn free_variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<Var>) {
        let add_term = |t: &Term, bound: &Vec<String>, out: &mut BTreeSet<Var>| {
            let mut vs = BTreeSet::new();
            t.collect_vars(&mut vs);
            for v in vs {
                if !bound.contains(&v.name) {
                    out.insert(v);
                }
            }
        };
        match self {
            Formula::True | Formula::False => {}
            Formula::Eq(a, b) => {
                add_term(a, bound, out);
                add_term(b, bound, out);
            }
            Formula::Rel(_, args) => args.iter().for_each(|t| add_term(t, bound, out)),
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_free(bound, out)),
            Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                bound.push(v.name.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_variable_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit_terms(&mut |t| {
            let mut vs = BTreeSet::new();
            t.collect_vars(&mut vs);
            out.extend(vs.into_iter().map(|v| v.name));
        });
        self.visit(&mut |f| {
            if let Formula::Forall(v, _) | Formula::Exists(v, _) = f {
                out.insert(v.name.clone());
            }
        });
        out
    }

    /// Pre-order traversal of all subformulas.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => g.visit(f),
            Formula::And(gs) | Formula::Or(gs) => gs.iter().for_each(|g| g.visit(f)),
            Formula::Implies(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => {}
        }
    }

    /// Visits the top-level terms of every atom.
    pub fn visit_terms(&self, f: &mut impl FnMut(&Term)) {
        self.visit(&mut |g| match g {
            Formula::Eq(a, b) => {
                f(a);
                f(b);
            }
            Formula::Rel(_, args) => args.iter().for_each(&mut *f),
            _ => {}
        });
    }

    pub fn is_quantifier_free(&self) -> bool {
        let mut qf = true;
        self.visit(&mut |g| {
            if matches!(g, Formula::Forall(..) | Formula::Exists(..)) {
                qf = false;
            }
        });
        qf
    }

    pub fn relation_symbols(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |g| {
            if let Formula::Rel(r, _) = g {
                out.insert(r.clone());
            }
        });
        out
    }

    pub fn uses_function(&self, name: &str) -> bool {
        let mut used = false;
        self.visit_terms(&mut |t| used |= t.uses_function(name));
        used
    }

    /// Number of nested quantifiers along the deepest path.
    pub fn quantifier_rank(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Eq(..) | Formula::Rel(..) => 0,
            Formula::Not(f) => f.quantifier_rank(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().map(|f| f.quantifier_rank()).max().unwrap_or(0),
            Formula::Implies(a, b) => a.quantifier_rank().max(b.quantifier_rank()),
            Formula::Forall(_, f) | Formula::Exists(_, f) => 1 + f.quantifier_rank(),
        }
    }

    /// Capture-avoiding simultaneous substitution of terms for free variables.
    ///
    /// Bound variables that would capture a free variable of an inserted term
    /// are renamed by appending primes.
    pub fn substitute(&self, map: &BTreeMap<String, Term>) -> Formula {
        if map.is_empty() {
            return self.clone();
        }
        match self {
            Formula::True | Formula::False => self.clone(),
            Formula::Eq(a, b) => Formula::Eq(a.substitute(map), b.substitute(map)),
            Formula::Rel(r, args) => Formula::Rel(r.clone(), args.iter().map(|t| t.substitute(map)).collect()),
            Formula::Not(f) => Formula::not(f.substitute(map)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.substitute(map)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.substitute(map)).collect()),
            Formula::Implies(a, b) => Formula::implies(a.substitute(map), b.substitute(map)),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let q = if matches!(self, Formula::Forall(..)) { Quantifier::Forall } else { Quantifier::Exists };
                let mut inner = map.clone();
                inner.remove(&v.name);
                let body_free: BTreeSet<String> = body.free_variables().into_iter().map(|v| v.name).collect();
                inner.retain(|k, _| body_free.contains(k));
                if inner.is_empty() {
                    return self.clone();
                }
                let mut incoming = BTreeSet::new();
                for t in inner.values() {
                    let mut vs = BTreeSet::new();
                    t.collect_vars(&mut vs);
                    incoming.extend(vs.into_iter().map(|v| v.name));
                }
                if incoming.contains(&v.name) {
                    let mut avoid = incoming.clone();
                    avoid.extend(body.all_variable_names());
                    avoid.extend(inner.keys().cloned());
                    let fresh = fresh_name(&v.name, &avoid);
                    let renamed = Var::new(fresh.clone(), &v.sort);
                    inner.insert(v.name.clone(), Term::Var(renamed.clone()));
                    Formula::quant(q, renamed, body.substitute(&inner))
                } else {
                    Formula::quant(q, v.clone(), body.substitute(&inner))
                }
            }
        }
    }

    /// Renames every bound variable to a name unique within the formula.
    pub fn rename_bound_apart(&self, avoid: &mut BTreeSet<String>) -> Formula {
        match self {
            Formula::Not(f) => Formula::not(f.rename_bound_apart(avoid)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.rename_bound_apart(avoid)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.rename_bound_apart(avoid)).collect()),
            Formula::Implies(a, b) => {
                let a = a.rename_bound_apart(avoid);
                Formula::implies(a, b.rename_bound_apart(avoid))
            }
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let q = if matches!(self, Formula::Forall(..)) { Quantifier::Forall } else { Quantifier::Exists };
                let name = if avoid.contains(&v.name) { fresh_name(&v.name, avoid) } else { v.name.clone() };
                avoid.insert(name.clone());
                let nv = Var::new(name.clone(), &v.sort);
                let body = if name != v.name {
                    let mut m = BTreeMap::new();
                    m.insert(v.name.clone(), Term::Var(nv.clone()));
                    body.substitute(&m)
                } else {
                    (**body).clone()
                };
                Formula::quant(q, nv, body.rename_bound_apart(avoid))
            }
            _ => self.clone(),
        }
    }
}

/// `base` followed by as many primes as needed to avoid `avoid`.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let mut name = format!("{}'", base);
    while avoid.contains(&name) {
        name.push('\'');
    }
    name
}
