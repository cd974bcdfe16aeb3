use std::time::Instant;

use serde::Serialize;

use super::{Compiled, FiniteStructure, StructureError};
use crate::formula::{Formula, Theory, Var};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub bindings: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub theory: String,
    pub structure: String,
    pub results: Vec<AxiomResult>,
}

impl CheckReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

/// Evaluates a closed formula and, when false, reports the universally
/// bound values that falsify it.
pub fn check_formula(s: &FiniteStructure, f: &Formula) -> Result<(bool, Option<Counterexample>), StructureError> {
    let c = Compiled::new(s, f, &[])?;
    let holds = c.eval(&[]);
    let cex = if holds {
        None
    } else {
        let sorts = binder_sorts(f);
        c.witness().map(|w| Counterexample {
            bindings: w
                .into_iter()
                .map(|(name, v)| {
                    let shown = match sorts.iter().find(|x| x.name == name) {
                        Some(x) => s.name_of(x.sort.as_str(), v),
                        None => v.to_string(),
                    };
                    (name, shown)
                })
                .collect(),
        })
    };
    Ok((holds, cex))
}

fn binder_sorts(f: &Formula) -> Vec<Var> {
    let mut out = Vec::new();
    f.visit(&mut |g| {
        if let Formula::Forall(v, _) | Formula::Exists(v, _) = g {
            out.push(v.clone());
        }
    });
    out
}

/// Checks every axiom of `t` (schemes instantiated at `n`) in `s`.
pub fn check_theory(s: &FiniteStructure, t: &Theory, n: usize) -> Result<CheckReport, StructureError> {
    let sv = s.vocabulary();
    for r in &t.vocabulary.relations {
        if sv.relation(&r.name) != Some(r) {
            return Err(StructureError::Vocabulary(format!("relation `{}` of theory {} missing from the structure", r.name, t.name)));
        }
    }
    let mut results = Vec::new();
    for ax in t.instantiate(n) {
        let start = Instant::now();
        let (holds, counterexample) = check_formula(s, &ax.formula)?;
        results.push(AxiomResult { name: ax.name, holds, counterexample, millis: start.elapsed().as_millis() });
    }
    Ok(CheckReport { theory: t.name.clone(), structure: sv.name.clone(), results })
}
