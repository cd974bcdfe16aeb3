use super::{parse_formula, vocab::Vocabulary, Formula, FormulaError};

#[derive(Debug, Clone, PartialEq)]
pub struct NamedAxiom {
    pub name: String,
    pub formula: Formula,
}

/// An axiom scheme: instance `n` of the scheme as a closed formula.
#[derive(Clone)]
pub struct AxiomScheme {
    pub name: String,
    pub generate: fn(usize) -> NamedAxiom,
}

impl std::fmt::Debug for AxiomScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AxiomScheme({})", self.name)
    }
}

#[derive(Debug, Clone)]
pub struct Theory {
    pub name: String,
    pub vocabulary: Vocabulary,
    pub axioms: Vec<NamedAxiom>,
    pub schemes: Vec<AxiomScheme>,
}

impl Theory {
    pub fn new(name: &str, vocabulary: Vocabulary) -> Self {
        Theory { name: name.into(), vocabulary, axioms: Vec::new(), schemes: Vec::new() }
    }

    /// Parses and appends a closed axiom.
    pub fn with_axiom(mut self, name: &str, text: &str) -> Result<Self, FormulaError> {
        let formula = parse_formula(text, &self.vocabulary)?;
        self.push(name, formula)?;
        Ok(self)
    }

    pub fn push(&mut self, name: &str, formula: Formula) -> Result<(), FormulaError> {
        if let Some(v) = formula.free_variables().into_iter().next() {
            return Err(FormulaError::sort(&v.name, format!("axiom `{}` is not closed", name)));
        }
        self.axioms.push(NamedAxiom { name: name.into(), formula });
        Ok(())
    }

    pub fn with_scheme(mut self, name: &str, generate: fn(usize) -> NamedAxiom) -> Self {
        self.schemes.push(AxiomScheme { name: name.into(), generate });
        self
    }

    /// The axioms in order, followed by one instance of each scheme.
    pub fn instantiate(&self, n: usize) -> Vec<NamedAxiom> {
        let mut out = self.axioms.clone();
        out.extend(self.schemes.iter().map(|s| (s.generate)(n)));
        out
    }

    pub fn axiom(&self, name: &str) -> Option<&Formula> {
        self.axioms.iter().find(|a| a.name == name).map(|a| &a.formula)
    }

    pub fn axiom_names(&self, n: usize) -> Vec<String> {
        self.instantiate(n).into_iter().map(|a| a.name).collect()
    }

    /// Theory with the axioms of both, keeping the first occurrence of a name.
    pub fn extend(&self, name: &str, other: &Theory) -> Theory {
        let mut t = self.clone();
        t.name = name.into();
        t.vocabulary = self.vocabulary.union(&other.vocabulary, &self.vocabulary.name);
        for a in &other.axioms {
            if t.axioms.iter().all(|b| b.name != a.name) {
                t.axioms.push(a.clone());
            }
        }
        for s in &other.schemes {
            if t.schemes.iter().all(|b| b.name != s.name) {
                t.schemes.push(s.clone());
            }
        }
        t
    }
}
