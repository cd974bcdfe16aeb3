use std::collections::BTreeSet;
use std::fmt;

use super::FormulaError;

/// A sort name such as `Point`, `Line` or `Elem`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sort(pub String);

impl Sort {
    pub fn new(name: impl Into<String>) -> Self {
        Sort(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelSymbol {
    pub name: String,
    pub args: Vec<Sort>,
}

/// A function symbol. Variadic symbols take two or more arguments, all of
/// the sort of `args[0]`, and fold left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnSymbol {
    pub name: String,
    pub args: Vec<Sort>,
    pub result: Sort,
    pub variadic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vocabulary {
    pub name: String,
    pub sorts: Vec<Sort>,
    pub relations: Vec<RelSymbol>,
    pub functions: Vec<FnSymbol>,
    pub constants: Vec<(String, Sort)>,
    /// Sort of numeric literals, if the vocabulary admits them.
    pub numeric: Option<Sort>,
}

impl Vocabulary {
    pub fn new(name: impl Into<String>) -> Self {
        Vocabulary {
            name: name.into(),
            sorts: Vec::new(),
            relations: Vec::new(),
            functions: Vec::new(),
            constants: Vec::new(),
            numeric: None,
        }
    }

    pub fn with_sort(mut self, s: &str) -> Self {
        self.sorts.push(Sort::new(s));
        self
    }

    pub fn with_relation(mut self, name: &str, args: &[&str]) -> Self {
        self.relations.push(RelSymbol {
            name: name.to_string(),
            args: args.iter().map(|s| Sort::new(*s)).collect(),
        });
        self
    }

    pub fn with_function(mut self, name: &str, args: &[&str], result: &str) -> Self {
        self.functions.push(FnSymbol {
            name: name.to_string(),
            args: args.iter().map(|s| Sort::new(*s)).collect(),
            result: Sort::new(result),
            variadic: false,
        });
        self
    }

    pub fn with_variadic(mut self, name: &str, sort: &str) -> Self {
        self.functions.push(FnSymbol {
            name: name.to_string(),
            args: vec![Sort::new(sort), Sort::new(sort)],
            result: Sort::new(sort),
            variadic: true,
        });
        self
    }

    pub fn with_constant(mut self, name: &str, sort: &str) -> Self {
        self.constants.push((name.to_string(), Sort::new(sort)));
        self
    }

    pub fn with_numerals(mut self, sort: &str) -> Self {
        self.numeric = Some(Sort::new(sort));
        self
    }

    /// Checks that symbol names are distinct and every mentioned sort is declared.
    pub fn validate(&self) -> Result<(), FormulaError> {
        let mut seen = BTreeSet::new();
        for s in &self.sorts {
            if !seen.insert(format!("sort:{}", s)) {
                return Err(FormulaError::sort(s.as_str(), "duplicate sort"));
            }
        }
        let mut names = BTreeSet::new();
        let symbols = self
            .relations
            .iter()
            .map(|r| (&r.name, r.args.iter().collect::<Vec<_>>()))
            .chain(self.functions.iter().map(|f| {
                let mut v: Vec<&Sort> = f.args.iter().collect();
                v.push(&f.result);
                (&f.name, v)
            }))
            .chain(self.constants.iter().map(|(n, s)| (n, vec![s])));
        for (name, sorts) in symbols {
            if !names.insert(name.clone()) {
                return Err(FormulaError::sort(name, "duplicate symbol"));
            }
            for s in sorts {
                if !self.has_sort(s) {
                    return Err(FormulaError::sort(name, format!("undeclared sort {}", s)));
                }
            }
        }
        if let Some(n) = &self.numeric {
            if !self.has_sort(n) {
                return Err(FormulaError::sort(n.as_str(), "undeclared numeric sort"));
            }
        }
        Ok(())
    }

    pub fn has_sort(&self, s: &Sort) -> bool {
        self.sorts.contains(s)
    }

    pub fn sort(&self, name: &str) -> Option<&Sort> {
        self.sorts.iter().find(|s| s.as_str() == name)
    }

    pub fn relation(&self, name: &str) -> Option<&RelSymbol> {
        self.relations.iter().find(|r| r.name == name)
    }

    pub fn function(&self, name: &str) -> Option<&FnSymbol> {
        self.functions.iter().find(|f| f.name == name)
    }

    pub fn constant(&self, name: &str) -> Option<&Sort> {
        self.constants.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    /// The union of two vocabularies; symbols already present in `self` win.
    pub fn union(&self, other: &Vocabulary, name: &str) -> Vocabulary {
        let mut out = self.clone();
        out.name = name.to_string();
        for s in &other.sorts {
            if !out.has_sort(s) {
                out.sorts.push(s.clone());
            }
        }
        for r in &other.relations {
            if out.relation(&r.name).is_none() {
                out.relations.push(r.clone());
            }
        }
        for f in &other.functions {
            if out.function(&f.name).is_none() {
                out.functions.push(f.clone());
            }
        }
        for c in &other.constants {
            if out.constant(&c.0).is_none() {
                out.constants.push(c.clone());
            }
        }
        if out.numeric.is_none() {
            out.numeric = other.numeric.clone();
        }
        out
    }

    /// True if every symbol of `self` occurs in `other` with the same signature.
    pub fn is_subset_of(&self, other: &Vocabulary) -> bool {
        self.sorts.iter().all(|s| other.has_sort(s))
            && self.relations.iter().all(|r| other.relation(&r.name) == Some(r))
            && self.functions.iter().all(|f| other.function(&f.name) == Some(f))
            && self.constants.iter().all(|(n, s)| other.constant(n) == Some(s))
    }
}

/// Relations that are defined from the primitive geometric relations rather
/// than interpreted directly.
pub const DERIVED_RELATIONS: [&str; 4] = ["Par", "SymLine", "Peq", "Leq"];

pub const POINT: &str = "Point";
pub const LINE: &str = "Line";
pub const ELEM: &str = "Elem";

/// Incidence geometry: points, lines and `in`, plus the derived `Par`.
pub fn incidence() -> Vocabulary {
    Vocabulary::new("incidence")
        .with_sort(POINT)
        .with_sort(LINE)
        .with_relation("in", &[POINT, LINE])
        .with_relation("Par", &[LINE, LINE])
}

/// Wu's orthogonal geometry: incidence, equidistance, orthogonality.
pub fn wu() -> Vocabulary {
    let mut v = incidence()
        .with_relation("Eq", &[POINT, POINT, POINT, POINT])
        .with_relation("Or", &[LINE, LINE]);
    v.name = "wu".into();
    v
}

/// Hilbert-style geometry: incidence, betweenness, equidistance, equiangularity.
pub fn hilbert() -> Vocabulary {
    let mut v = incidence()
        .with_relation("Be", &[POINT, POINT, POINT])
        .with_relation("Eq", &[POINT, POINT, POINT, POINT])
        .with_relation("An", &[POINT, POINT, POINT, POINT, POINT, POINT]);
    v.name = "hilbert".into();
    v
}

/// Origami geometry: incidence, symmetric line, L- and P-equidistance, orthogonality.
pub fn origami() -> Vocabulary {
    let mut v = incidence()
        .with_relation("SymLine", &[POINT, LINE, POINT])
        .with_relation("Leq", &[POINT, LINE, POINT])
        .with_relation("Peq", &[LINE, POINT, LINE])
        .with_relation("Or", &[LINE, LINE]);
    v.name = "origami".into();
    v
}

/// Field language with both presentations: the functional symbols
/// `add mul sub neg inv`, the relations `Add Mult`, and numerals.
pub fn field() -> Vocabulary {
    Vocabulary::new("field")
        .with_sort(ELEM)
        .with_variadic("add", ELEM)
        .with_variadic("mul", ELEM)
        .with_function("sub", &[ELEM, ELEM], ELEM)
        .with_function("neg", &[ELEM], ELEM)
        .with_function("inv", &[ELEM], ELEM)
        .with_relation("Add", &[ELEM, ELEM, ELEM])
        .with_relation("Mult", &[ELEM, ELEM, ELEM])
        .with_numerals(ELEM)
}

/// Ordered field language: [`field`] plus `le` and `lt`.
pub fn ordered_field() -> Vocabulary {
    let mut v = field()
        .with_relation("le", &[ELEM, ELEM])
        .with_relation("lt", &[ELEM, ELEM]);
    v.name = "ofield".into();
    v
}

/// Looks up a built-in vocabulary by name.
pub fn by_name(name: &str) -> Option<Vocabulary> {
    match name {
        "incidence" | "in" => Some(incidence()),
        "wu" => Some(wu()),
        "hilbert" => Some(hilbert()),
        "origami" => Some(origami()),
        "field" | "f-field" => Some(field()),
        "ofield" | "f-ofield" => Some(ordered_field()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_vocabularies_validate() {
        for v in [incidence(), wu(), hilbert(), origami(), field(), ordered_field()] {
            v.validate().unwrap();
            assert!(v.relation("in").is_some() || v.sort(ELEM).is_some());
        }
    }

    #[test]
    fn duplicate_symbol_rejected() {
        let v = incidence().with_relation("in", &[POINT, LINE]);
        assert!(v.validate().is_err());
    }

    #[test]
    fn undeclared_sort_rejected() {
        let v = Vocabulary::new("bad").with_sort("A").with_relation("R", &["B"]);
        assert!(v.validate().is_err());
    }

    #[test]
    fn incidence_is_subset_of_wu() {
        assert!(incidence().is_subset_of(&wu()));
        assert!(!wu().is_subset_of(&incidence()));
    }
}
