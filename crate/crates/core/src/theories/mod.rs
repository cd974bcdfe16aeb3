//! The axiom library and the named theories built from it.

mod catalog;
mod expand;

use std::fmt::Write;

pub use expand::{expand_defined_relations, perpendicular_through};

use crate::formula::sexpr::read_all;
use crate::formula::{parse_formula, vocab, FormulaError, NamedAxiom, Theory, Vocabulary};
use crate::structure::field_axioms;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TheoryError {
    #[error("unknown theory `{0}`")]
    UnknownTheory(String),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("malformed theory file: {0}")]
    Malformed(String),
}

pub const THEORY_NAMES: [&str; 9] =
    ["affine", "pappus", "hilbert", "p-hilbert", "euclid", "o-wu", "m-wu", "a-origami", "field"];

fn vocabulary_for(name: &str) -> Vocabulary {
    match name {
        n if n.starts_with("B-") || n.starts_with("C-") || n == "AxE" => vocab::hilbert(),
        n if n.starts_with("O-") || n == "AxSymAx" || n == "AxTrans" => vocab::wu(),
        n if n.starts_with("H-") => vocab::origami(),
        _ => vocab::incidence(),
    }
}

/// Looks up a catalog axiom by name; `InfLines(n)` is accepted too.
pub fn axiom(name: &str) -> Result<NamedAxiom, TheoryError> {
    if let Some(n) = name.strip_prefix("InfLines(").and_then(|s| s.strip_suffix(')')) {
        let n = n.parse().map_err(|_| TheoryError::UnknownAxiom(name.into()))?;
        return Ok(inf_lines(n));
    }
    let text = [catalog::INCIDENCE, catalog::HILBERT, catalog::WU, catalog::ORIGAMI]
        .iter()
        .flat_map(|t| t.iter())
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| TheoryError::UnknownAxiom(name.into()))?;
    Ok(NamedAxiom { name: name.into(), formula: parse_formula(text, &vocabulary_for(name))? })
}

/// The printed wording of an axiom where it differs from the catalog entry.
pub fn printed_variant(name: &str) -> Option<NamedAxiom> {
    let (_, text) = catalog::PRINTED.iter().find(|(n, _)| *n == name)?;
    let formula = parse_formula(text, &vocab::origami()).expect("printed variants parse");
    Some(NamedAxiom { name: format!("{} (printed)", name), formula })
}

/// Every named catalog axiom, schemes excluded.
pub fn catalog_names() -> Vec<&'static str> {
    [catalog::INCIDENCE, catalog::HILBERT, catalog::WU, catalog::ORIGAMI].iter().flat_map(|t| t.iter().map(|(n, _)| *n)).collect()
}

/// Instance `n` of the infinity scheme: starting from `A₀ = A` on `l`,
/// `A_{i}` is where the parallel to `A_{i-1}B` through `C` meets `l`; the
/// auxiliary line `m = BC` is parallel to `l`. The points `A₀ … A_n` are
/// pairwise distinct.
pub fn inf_lines(n: usize) -> NamedAxiom {
    let pt = |i: usize| if i == 0 { "A".to_string() } else { format!("A{}", i) };
    let mut vars = String::from("(l Line) (A Point) (m Line) (B Point) (C Point)");
    let mut hyps = String::from("(in A l) (Par m l) (in B m) (in C m) (not (= B C))");
    for i in 1..=n {
        write!(vars, " (k{i} Line) (p{i} Line) (A{i} Point)").unwrap();
        write!(
            hyps,
            " (in {prev} k{i}) (in B k{i}) (in C p{i}) (Par k{i} p{i}) (in A{i} l) (in A{i} p{i})",
            prev = pt(i - 1)
        )
        .unwrap();
    }
    let mut concl = String::new();
    for i in 0..=n {
        for j in i + 1..=n {
            write!(concl, " (not (= {} {}))", pt(i), pt(j)).unwrap();
        }
    }
    let concl = if concl.is_empty() { "true".to_string() } else { format!("(and{})", concl) };
    let text = format!("(forall ({}) (=> (and {}) {}))", vars, hyps, concl);
    NamedAxiom { name: format!("InfLines({})", n), formula: parse_formula(&text, &vocab::incidence()).unwrap() }
}

fn build(name: &str, vocabulary: Vocabulary, axioms: &[&str], scheme: bool) -> Result<Theory, TheoryError> {
    let mut t = Theory::new(name, vocabulary);
    for a in axioms {
        let ax = axiom(a)?;
        t.push(&ax.name, ax.formula)?;
    }
    if scheme {
        t = t.with_scheme("InfLines", inf_lines);
    }
    Ok(t)
}

const INC: [&str; 3] = ["I-1", "I-2", "I-3"];

/// A named theory; schemes are instantiated by [`Theory::instantiate`].
pub fn theory(name: &str) -> Result<Theory, TheoryError> {
    let list = |extra: &[&'static str]| -> Vec<&'static str> { INC.iter().chain(extra).copied().collect() };
    match name {
        "affine" => build(name, vocab::incidence(), &list(&["ParAx"]), true),
        "pappus" => build(name, vocab::incidence(), &list(&["ParAx", "Pappus"]), true),
        "hilbert" => build(name, vocab::hilbert(), &list(&HILBERT_CORE), false),
        "p-hilbert" => build(name, vocab::hilbert(), &list(&[&HILBERT_CORE[..], &["ParAx"]].concat()), false),
        "euclid" => build(name, vocab::hilbert(), &list(&[&HILBERT_CORE[..], &["ParAx", "AxE"]].concat()), false),
        "o-wu" => build(name, vocab::wu(), &list(&O_WU), true),
        "m-wu" => build(name, vocab::wu(), &list(&[&O_WU[..], &["AxSymAx"]].concat()), true),
        "a-origami" => build(
            name,
            vocab::origami(),
            &list(&["ParAx", "H-1", "H-2", "H-3", "H-4", "H-5", "H-6", "H-7"]),
            true,
        ),
        "field" => Ok(field_axioms()),
        _ => Err(TheoryError::UnknownTheory(name.into())),
    }
}

const HILBERT_CORE: [&str; 10] = ["B-1", "B-2", "B-3", "B-4", "C-1", "C-2", "C-3", "C-4", "C-5", "C-6"];
const O_WU: [&str; 8] = ["O-1", "O-2", "O-3", "O-4", "O-5", "ParAx", "De-1", "De-2"];

/// Axioms of a named theory with the schemes instantiated at `n`.
pub fn theory_axioms(name: &str, n: usize) -> Result<Vec<NamedAxiom>, TheoryError> {
    Ok(theory(name)?.instantiate(n))
}

/// Renders a theory as an axiom file: a `(theory NAME VOCAB)` header and
/// one `(axiom NAME FORMULA)` form per axiom. Scheme instances are named
/// `(InfLines n)`.
pub fn export_theory(t: &Theory, n: usize) -> String {
    let mut out = format!("(theory {} {})\n", t.name, t.vocabulary.name);
    for a in t.instantiate(n) {
        let name = match a.name.strip_suffix(')').and_then(|s| s.split_once('(')) {
            Some((base, n)) => format!("({} {})", base, n),
            None => a.name.clone(),
        };
        writeln!(out, "(axiom {} {})", name, a.formula).unwrap();
    }
    out
}

pub fn import_theory(text: &str) -> Result<Theory, TheoryError> {
    let forms = read_all(text)?;
    let bad = |m: &str| TheoryError::Malformed(m.into());
    let (head, rest) = forms.split_first().ok_or_else(|| bad("empty file"))?;
    let h = head.list().ok_or_else(|| bad("header must be a list"))?;
    let (name, vname) = match h {
        [t, n, v] if t.atom() == Some("theory") => {
            (n.atom().ok_or_else(|| bad("theory name"))?, v.atom().ok_or_else(|| bad("vocabulary name"))?)
        }
        _ => return Err(bad("expected (theory NAME VOCAB)")),
    };
    let vocabulary = vocab::by_name(vname).ok_or_else(|| bad("unknown vocabulary"))?;
    let mut t = Theory::new(name, vocabulary);
    for form in rest {
        match form.list() {
            Some([a, n, body]) if a.atom() == Some("axiom") => {
                let n = match (n.atom(), n.list()) {
                    (Some(a), _) => a.to_string(),
                    (_, Some([b, k])) if b.atom().is_some() && k.atom().is_some() => {
                        format!("{}({})", b.atom().unwrap(), k.atom().unwrap())
                    }
                    _ => return Err(bad("axiom name")),
                };
                let f = crate::formula::formula_from_sexpr(body, &t.vocabulary, &[])?;
                t.push(&n, f)?;
            }
            _ => return Err(bad("expected (axiom NAME FORMULA)")),
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests;
