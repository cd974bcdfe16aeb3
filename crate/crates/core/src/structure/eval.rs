use std::cell::RefCell;
use std::collections::BTreeMap;

use super::{FiniteStructure, FnTable, Relation, StructureError};
use crate::formula::{Formula, Quantifier, Term, Var};

/// Values of free variables, by name.
pub type Assignment = BTreeMap<String, u32>;

enum CT {
    Slot(usize),
    Elem(u32),
    App(usize, Vec<CT>),
}

enum Source {
    All(u32),
    Guard { rel: usize, var_pos: Vec<usize>, fixed: Vec<(usize, CT)> },
}

struct Step {
    slot: usize,
    source: Source,
    filters: Vec<CF>,
}

enum CF {
    Const(bool),
    Eq(CT, CT),
    Rel(usize, Vec<CT>),
    Not(Box<CF>),
    And(Vec<CF>),
    Or(Vec<CF>),
    Implies(Box<CF>, Box<CF>),
    Block { forall: bool, pre: Vec<CF>, steps: Vec<Step>, rest: Box<CF>, spine: bool },
}

/// A formula compiled against one structure: variables become slots,
/// symbols become table references and quantifier blocks get guard plans.
pub struct Compiled<'s> {
    rels: Vec<&'s Relation>,
    fns: Vec<&'s FnTable>,
    root: CF,
    slots: usize,
    free: Vec<Var>,
    names: Vec<String>,
    witness: RefCell<Option<(Vec<u32>, Vec<usize>)>>,
}

struct Builder<'s> {
    s: &'s FiniteStructure,
    rels: Vec<&'s Relation>,
    rel_ids: BTreeMap<String, usize>,
    fns: Vec<&'s FnTable>,
    fn_ids: BTreeMap<String, usize>,
    scope: Vec<(String, usize)>,
    slots: usize,
    names: Vec<String>,
    guarded: bool,
}

impl<'s> Builder<'s> {
    fn new_slot(&mut self, name: &str) -> usize {
        self.slots += 1;
        self.names.push(name.to_string());
        self.slots - 1
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        self.scope.iter().rev().find(|(n, _)| n == name).map(|(_, s)| *s)
    }

    fn rel(&mut self, name: &str) -> Result<usize, StructureError> {
        if let Some(&i) = self.rel_ids.get(name) {
            return Ok(i);
        }
        let r = self
            .s
            .relations
            .get(name)
            .ok_or_else(|| StructureError::UnknownSymbol(format!("{} (no table in this structure)", name)))?;
        self.rels.push(r);
        self.rel_ids.insert(name.into(), self.rels.len() - 1);
        Ok(self.rels.len() - 1)
    }

    fn func(&mut self, name: &str) -> Result<usize, StructureError> {
        if let Some(&i) = self.fn_ids.get(name) {
            return Ok(i);
        }
        let t = self
            .s
            .functions
            .get(name)
            .ok_or_else(|| StructureError::UnknownSymbol(format!("{} (no table in this structure)", name)))?;
        self.fns.push(t);
        self.fn_ids.insert(name.into(), self.fns.len() - 1);
        Ok(self.fns.len() - 1)
    }

    fn term(&mut self, t: &Term) -> Result<CT, StructureError> {
        Ok(match t {
            Term::Var(v) => CT::Slot(self.lookup(&v.name).ok_or_else(|| StructureError::Unassigned(v.name.clone()))?),
            Term::Const(c) => CT::Elem(self.s.constant(c).ok_or_else(|| StructureError::UnknownSymbol(c.clone()))?),
            Term::Num(r) => CT::Elem(self.s.numeral(r).ok_or_else(|| StructureError::Numeral(r.to_string()))?),
            Term::App(f, args) => {
                let id = self.func(f)?;
                let args = args.iter().map(|a| self.term(a)).collect::<Result<Vec<_>, _>>()?;
                if args.len() > 2 && self.fns[id].sizes.len() == 2 {
                    // fold variadic applications into nested binary ones
                    let mut it = args.into_iter();
                    let mut acc = it.next().unwrap();
                    for b in it {
                        acc = CT::App(id, vec![acc, b]);
                    }
                    acc
                } else {
                    CT::App(id, args)
                }
            }
        })
    }

    fn formula(&mut self, f: &Formula, spine: bool) -> Result<CF, StructureError> {
        Ok(match f {
            Formula::True => CF::Const(true),
            Formula::False => CF::Const(false),
            Formula::Eq(a, b) => CF::Eq(self.term(a)?, self.term(b)?),
            Formula::Rel(r, args) => {
                let id = self.rel(r)?;
                CF::Rel(id, args.iter().map(|a| self.term(a)).collect::<Result<_, _>>()?)
            }
            Formula::Not(g) => CF::Not(Box::new(self.formula(g, false)?)),
            Formula::And(gs) => CF::And(gs.iter().map(|g| self.formula(g, spine)).collect::<Result<_, _>>()?),
            Formula::Or(gs) => CF::Or(gs.iter().map(|g| self.formula(g, false)).collect::<Result<_, _>>()?),
            Formula::Implies(a, b) => {
                CF::Implies(Box::new(self.formula(a, false)?), Box::new(self.formula(b, spine)?))
            }
            Formula::Forall(..) | Formula::Exists(..) => self.block(f, spine)?,
        })
    }

    fn block(&mut self, f: &Formula, spine: bool) -> Result<CF, StructureError> {
        let forall = matches!(f, Formula::Forall(..));
        let mut vars = Vec::new();
        let mut body = f;
        loop {
            match (body, forall) {
                (Formula::Forall(v, b), true) | (Formula::Exists(v, b), false) => {
                    vars.push(v.clone());
                    body = b;
                }
                _ => break,
            }
        }
        let depth = self.scope.len();
        let mut slots = Vec::new();
        for v in &vars {
            let s = self.new_slot(&v.name);
            self.scope.push((v.name.clone(), s));
            slots.push(s);
        }
        let (conjuncts, rest): (Vec<&Formula>, Option<&Formula>) = if !self.guarded {
            (Vec::new(), Some(body))
        } else if forall {
            match body {
                Formula::Implies(a, b) => (flatten_and(a), Some(b)),
                _ => (Vec::new(), Some(body)),
            }
        } else {
            (flatten_and(body), None)
        };
        let names: Vec<&str> = vars.iter().map(|v| v.name.as_str()).collect();
        // position of the last block variable each conjunct mentions
        let mut placed: Vec<Option<usize>> = vec![None; conjuncts.len()];
        let mut used_as_guard = vec![false; conjuncts.len()];
        let mut steps = Vec::new();
        let mut pre = Vec::new();
        for (ci, c) in conjuncts.iter().enumerate() {
            let fv = c.free_variables();
            let last = (0..vars.len()).rev().find(|&i| fv.iter().any(|v| v.name == names[i]));
            placed[ci] = last;
            if last.is_none() {
                pre.push(self.formula(c, false)?);
            }
        }
        for (i, v) in vars.iter().enumerate() {
            let size = self.s.carrier_size(v.sort.as_str()) as u32;
            let mut source = Source::All(size);
            if self.guarded {
                for (ci, c) in conjuncts.iter().enumerate() {
                    if used_as_guard[ci] || placed[ci] != Some(i) {
                        continue;
                    }
                    if let Formula::Rel(r, args) = c {
                        let var_pos: Vec<usize> = args
                            .iter()
                            .enumerate()
                            .filter(|(_, a)| matches!(a, Term::Var(x) if x.name == v.name))
                            .map(|(p, _)| p)
                            .collect();
                        if var_pos.is_empty() || args.len() > 8 {
                            continue;
                        }
                        // all other arguments must avoid variables bound later in the block
                        let later: Vec<&str> = names[i..].to_vec();
                        let ok = args.iter().enumerate().all(|(p, a)| {
                            var_pos.contains(&p) || !later.iter().any(|n| a.mentions(n))
                        });
                        if !ok {
                            continue;
                        }
                        let rel = self.rel(r)?;
                        let mut fixed = Vec::new();
                        for (p, a) in args.iter().enumerate() {
                            if !var_pos.contains(&p) {
                                fixed.push((p, self.term(a)?));
                            }
                        }
                        used_as_guard[ci] = true;
                        source = Source::Guard { rel, var_pos, fixed };
                        break;
                    }
                }
            }
            let mut filters = Vec::new();
            for (ci, c) in conjuncts.iter().enumerate() {
                if placed[ci] == Some(i) && !used_as_guard[ci] {
                    filters.push(self.formula(c, false)?);
                }
            }
            steps.push(Step { slot: slots[i], source, filters });
        }
        let rest = match rest {
            Some(b) => self.formula(b, spine && forall)?,
            None => CF::Const(true),
        };
        self.scope.truncate(depth);
        Ok(CF::Block { forall, pre, steps, rest: Box::new(rest), spine: spine && forall })
    }
}

fn flatten_and(f: &Formula) -> Vec<&Formula> {
    match f {
        Formula::And(gs) => gs.iter().flat_map(flatten_and).collect(),
        _ => vec![f],
    }
}

impl<'s> Compiled<'s> {
    /// Compiles `f` with the guarded-quantifier plan; `free` fixes the slot
    /// order of the free variables.
    pub fn new(s: &'s FiniteStructure, f: &Formula, free: &[Var]) -> Result<Self, StructureError> {
        Self::build(s, f, free, true)
    }

    /// Compiles without guards: every quantifier ranges over its whole carrier.
    pub fn unguarded(s: &'s FiniteStructure, f: &Formula, free: &[Var]) -> Result<Self, StructureError> {
        Self::build(s, f, free, false)
    }

    fn build(s: &'s FiniteStructure, f: &Formula, free: &[Var], guarded: bool) -> Result<Self, StructureError> {
        let mut b = Builder {
            s,
            rels: Vec::new(),
            rel_ids: BTreeMap::new(),
            fns: Vec::new(),
            fn_ids: BTreeMap::new(),
            scope: Vec::new(),
            slots: 0,
            names: Vec::new(),
            guarded,
        };
        for v in free {
            let slot = b.new_slot(&v.name);
            b.scope.push((v.name.clone(), slot));
        }
        for v in f.free_variables() {
            if b.lookup(&v.name).is_none() {
                return Err(StructureError::Unassigned(v.name));
            }
        }
        let root = b.formula(f, true)?;
        Ok(Compiled {
            rels: b.rels,
            fns: b.fns,
            root,
            slots: b.slots,
            free: free.to_vec(),
            names: b.names,
            witness: RefCell::new(None),
        })
    }

    pub fn free_variables(&self) -> &[Var] {
        &self.free
    }

    /// Evaluates with the free variables set to `values`, in declaration order.
    pub fn eval(&self, values: &[u32]) -> bool {
        let mut env = vec![0u32; self.slots];
        env[..values.len()].copy_from_slice(values);
        self.witness.replace(None);
        self.formula(&self.root, &mut env)
    }

    /// The universally bound variables, with values, along the chain of
    /// failing universal blocks of the last evaluation.
    pub fn witness(&self) -> Option<Vec<(String, u32)>> {
        let w = self.witness.borrow();
        let (env, slots) = w.as_ref()?;
        let mut slots: Vec<usize> = (0..self.free.len()).chain(slots.iter().copied()).collect();
        slots.sort_unstable();
        slots.dedup();
        Some(slots.into_iter().map(|s| (self.names[s].clone(), env[s])).collect())
    }

    fn term(&self, t: &CT, env: &[u32]) -> u32 {
        match t {
            CT::Slot(s) => env[*s],
            CT::Elem(e) => *e,
            CT::App(f, args) => {
                let table = self.fns[*f];
                match args.len() {
                    1 => table.get(&[self.term(&args[0], env)]),
                    2 => table.get(&[self.term(&args[0], env), self.term(&args[1], env)]),
                    _ => {
                        let vs: Vec<u32> = args.iter().map(|a| self.term(a, env)).collect();
                        table.get(&vs)
                    }
                }
            }
        }
    }

    fn formula(&self, f: &CF, env: &mut Vec<u32>) -> bool {
        match f {
            CF::Const(b) => *b,
            CF::Eq(a, b) => self.term(a, env) == self.term(b, env),
            CF::Rel(r, args) => {
                let mut buf = [0u32; 8];
                if args.len() <= 8 {
                    for (i, a) in args.iter().enumerate() {
                        buf[i] = self.term(a, env);
                    }
                    self.rels[*r].contains(&buf[..args.len()])
                } else {
                    let vs: Vec<u32> = args.iter().map(|a| self.term(a, env)).collect();
                    self.rels[*r].contains(&vs)
                }
            }
            CF::Not(g) => !self.formula(g, env),
            CF::And(gs) => gs.iter().all(|g| self.formula(g, env)),
            CF::Or(gs) => gs.iter().any(|g| self.formula(g, env)),
            CF::Implies(a, b) => !self.formula(a, env) || self.formula(b, env),
            CF::Block { forall, pre, steps, rest, spine } => {
                if !pre.iter().all(|g| self.formula(g, env)) {
                    return *forall;
                }
                let found = self.search(steps, 0, rest, *forall, env);
                // `found` means a falsifying assignment for ∀, a witness for ∃
                if *forall {
                    if found && *spine {
                        let mut w = self.witness.borrow_mut();
                        let own = steps.iter().map(|s| s.slot);
                        match w.as_mut() {
                            None => *w = Some((env.clone(), own.collect())),
                            Some((_, slots)) => slots.extend(own),
                        }
                    }
                    !found
                } else {
                    found
                }
            }
        }
    }

    /// Searches for an assignment of the block variables passing all
    /// filters on which `rest` is false (∀) or true (∃).
    fn search(&self, steps: &[Step], i: usize, rest: &CF, forall: bool, env: &mut Vec<u32>) -> bool {
        if i == steps.len() {
            return self.formula(rest, env) != forall;
        }
        let step = &steps[i];
        let try_value = |v: u32, env: &mut Vec<u32>| -> bool {
            env[step.slot] = v;
            step.filters.iter().all(|g| self.formula(g, env)) && self.search(steps, i + 1, rest, forall, env)
        };
        match &step.source {
            Source::All(n) => (0..*n).any(|v| try_value(v, env)),
            Source::Guard { rel, var_pos, fixed } => {
                let r = self.rels[*rel];
                let mut vals = [0u32; 8];
                for (k, (_, t)) in fixed.iter().enumerate() {
                    vals[k] = self.term(t, env);
                }
                let matches = |tuple: &[u32]| -> Option<u32> {
                    for (k, (p, _)) in fixed.iter().enumerate() {
                        if tuple[*p] != vals[k] {
                            return None;
                        }
                    }
                    let v = tuple[var_pos[0]];
                    var_pos.iter().all(|&p| tuple[p] == v).then_some(v)
                };
                if let Some((p0, _)) = fixed.first() {
                    let ids = r.with_value(*p0, vals[0]);
                    ids.iter().any(|&id| match matches(r.tuple(id)) {
                        Some(v) => try_value(v, env),
                        None => false,
                    })
                } else {
                    r.tuples().iter().any(|t| match matches(t) {
                        Some(v) => try_value(v, env),
                        None => false,
                    })
                }
            }
        }
    }
}

/// Truth of `f` in `s` under `a`, using the guarded evaluator.
pub fn eval_formula(s: &FiniteStructure, f: &Formula, a: &Assignment) -> Result<bool, StructureError> {
    let free: Vec<Var> = f.free_variables().into_iter().collect();
    let mut values = Vec::new();
    for v in &free {
        values.push(*a.get(&v.name).ok_or_else(|| StructureError::Unassigned(v.name.clone()))?);
    }
    Ok(Compiled::new(s, f, &free)?.eval(&values))
}

/// Direct Tarskian evaluation by full enumeration, without compilation.
pub fn eval_naive(s: &FiniteStructure, f: &Formula, a: &Assignment) -> Result<bool, StructureError> {
    let mut env = a.clone();
    naive(s, f, &mut env)
}

fn naive_term(s: &FiniteStructure, t: &Term, env: &Assignment) -> Result<u32, StructureError> {
    match t {
        Term::Var(v) => env.get(&v.name).copied().ok_or_else(|| StructureError::Unassigned(v.name.clone())),
        Term::Const(c) => s.constant(c).ok_or_else(|| StructureError::UnknownSymbol(c.clone())),
        Term::Num(r) => s.numeral(r).ok_or_else(|| StructureError::Numeral(r.to_string())),
        Term::App(f, args) => {
            let vs = args.iter().map(|a| naive_term(s, a, env)).collect::<Result<Vec<_>, _>>()?;
            s.apply(f, &vs).ok_or_else(|| StructureError::UnknownSymbol(f.clone()))
        }
    }
}

fn naive(s: &FiniteStructure, f: &Formula, env: &mut Assignment) -> Result<bool, StructureError> {
    Ok(match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Eq(a, b) => naive_term(s, a, env)? == naive_term(s, b, env)?,
        Formula::Rel(r, args) => {
            if !s.has_relation(r) {
                return Err(StructureError::UnknownSymbol(r.clone()));
            }
            let vs = args.iter().map(|a| naive_term(s, a, env)).collect::<Result<Vec<_>, _>>()?;
            s.holds(r, &vs)
        }
        Formula::Not(g) => !naive(s, g, env)?,
        Formula::And(gs) => {
            for g in gs {
                if !naive(s, g, env)? {
                    return Ok(false);
                }
            }
            true
        }
        Formula::Or(gs) => {
            for g in gs {
                if naive(s, g, env)? {
                    return Ok(true);
                }
            }
            false
        }
        Formula::Implies(a, b) => !naive(s, a, env)? || naive(s, b, env)?,
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let q = if matches!(f, Formula::Forall(..)) { Quantifier::Forall } else { Quantifier::Exists };
            let saved = env.get(&v.name).copied();
            let mut result = q == Quantifier::Forall;
            for e in 0..s.carrier_size(v.sort.as_str()) as u32 {
                env.insert(v.name.clone(), e);
                let b = naive(s, g, env)?;
                if q == Quantifier::Forall && !b {
                    result = false;
                    break;
                }
                if q == Quantifier::Exists && b {
                    result = true;
                    break;
                }
            }
            match saved {
                Some(x) => env.insert(v.name.clone(), x),
                None => env.remove(&v.name),
            };
            result
        }
    })
}
