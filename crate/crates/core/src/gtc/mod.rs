//! The geometric theorem checker: conjectures about planes are expanded,
//! translated into field arithmetic and handed to a decision kernel.

mod normal;
mod sample;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{classify_fragment, nnf, pretty, vocab, Formula, FormulaError, FragmentClass, Vocabulary};
use crate::poly::{
    acf0_decide_bounded, rcf_decide_bounded, Decision, PolyError, DEFAULT_NODE_BUDGET, DEFAULT_PAIR_BUDGET,
};
use crate::scheme::{scheme_pp_hilbert, scheme_pp_wu, translate_formula, SchemeError, TranslationScheme};
use crate::theories::{expand_defined_relations, theory, TheoryError};

pub use normal::{block_depth, eliminate_solved, split_conjuncts, translate_normalized};
pub use sample::{find_counterexample, SampleOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    /// Real closed fields.
    Ordered,
    /// Algebraically closed fields of characteristic 0.
    Unordered,
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ordered" => Ok(Semantics::Ordered),
            "unordered" => Ok(Semantics::Unordered),
            _ => Err(format!("unknown semantics `{}` (expected ordered or unordered)", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Valid,
    Invalid,
    UnsupportedFragment,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Valid => 0,
            Status::Invalid => 1,
            Status::UnsupportedFragment => 2,
            Status::BudgetExceeded => 3,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Valid => "valid",
            Status::Invalid => "invalid",
            Status::UnsupportedFragment => "unsupported-fragment",
            Status::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Debug, Error)]
pub enum GtcError {
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error("{0}")]
    Input(String),
    #[error("kernel error: {0}")]
    Kernel(PolyError),
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    /// Overrides the theory's default semantics. Conjectures using `Be` or
    /// `An` are always decided over real closed fields.
    pub semantics: Option<Semantics>,
    /// Gröbner pair budget or Cohen–Hörmander node budget.
    pub budget: Option<usize>,
    pub sampling: SampleOptions,
}

#[derive(Debug, Clone)]
pub struct Job {
    pub theory: String,
    pub conjecture: Formula,
    pub options: Options,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub status: Status,
    /// The translated field sentence, when translation succeeded.
    pub translation: Option<String>,
    pub time_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<BTreeMap<String, String>>,
    pub semantics: Option<Semantics>,
    pub scheme: Option<String>,
    pub fragment: String,
    /// Kernels that ran, in order.
    pub kernel: Vec<String>,
    pub report: String,
}

impl Verdict {
    fn new(status: Status, fragment: FragmentClass, report: impl Into<String>) -> Self {
        Verdict {
            status,
            translation: None,
            time_ms: 0,
            counterexample: None,
            semantics: None,
            scheme: None,
            fragment: fragment_name(fragment).into(),
            kernel: Vec::new(),
            report: report.into(),
        }
    }

    /// Multi-line human-readable rendering.
    pub fn render(&self) -> String {
        let mut out = format!("status:      {}\n", self.status);
        if let Some(s) = self.semantics {
            out += &format!("semantics:   {:?}\n", s).to_lowercase();
        }
        if let Some(s) = &self.scheme {
            out += &format!("scheme:      {}\n", s);
        }
        out += &format!("fragment:    {}\n", self.fragment);
        if !self.kernel.is_empty() {
            out += &format!("kernel:      {}\n", self.kernel.join(", "));
        }
        out += &format!("time:        {} ms\n", self.time_ms);
        if let Some(c) = &self.counterexample {
            out += "counterexample:\n";
            for (k, v) in c {
                out += &format!("  {} = {}\n", k, v);
            }
        }
        out += &format!("report:      {}\n", self.report);
        if let Some(t) = &self.translation {
            out += &format!("translation:\n{}\n", t);
        }
        out
    }
}

fn fragment_name(c: FragmentClass) -> &'static str {
    match c {
        FragmentClass::QuantifierFree => "quantifier-free",
        FragmentClass::Universal => "universal",
        FragmentClass::Existential => "existential",
        FragmentClass::UniversalHorn => "universal-horn",
        FragmentClass::General => "general",
    }
}

/// Why only the universal fragment is decided.
pub const UNDECIDABILITY_NOTE: &str = "The first-order theories of Hilbert, Euclidean, Wu and origami planes are \
undecidable: each plane interprets its coordinate field, and the theory of fields of characteristic 0 is \
undecidable by Julia Robinson's theorem. Only universal consequences reduce to the decidable theories RCF and ACF0.";

/// Catalog theories whose universal consequences reduce to a field kernel, with the default semantics.
pub const SUPPORTED_THEORIES: [(&str, Semantics); 5] = [
    ("p-hilbert", Semantics::Ordered),
    ("euclid", Semantics::Ordered),
    ("m-wu", Semantics::Unordered),
    ("a-origami", Semantics::Unordered),
    ("pappus", Semantics::Unordered),
];

pub fn default_semantics(theory: &str) -> Option<Semantics> {
    SUPPORTED_THEORIES.iter().find(|(n, _)| *n == theory).map(|(_, s)| *s)
}

fn uses_order(f: &Formula) -> bool {
    let rels = f.relation_symbols();
    rels.contains("Be") || rels.contains("An")
}

fn within(f: &Formula, v: &Vocabulary) -> bool {
    f.relation_symbols().iter().all(|r| v.relation(r).is_some())
}

/// `PP_hilbert` for ordered targets when the vocabulary allows, `PP_wu` otherwise.
fn pick_scheme(f: &Formula, semantics: Semantics) -> Result<TranslationScheme, GtcError> {
    if semantics == Semantics::Ordered && within(f, &vocab::hilbert()) {
        return Ok(scheme_pp_hilbert());
    }
    if within(f, &vocab::wu()) {
        return Ok(scheme_pp_wu());
    }
    if within(f, &vocab::hilbert()) {
        return Err(GtcError::Input("betweenness and angles need the ordered semantics".into()));
    }
    Err(GtcError::Input(format!(
        "no analytic scheme covers the relations {:?}",
        f.relation_symbols().into_iter().collect::<Vec<_>>()
    )))
}

/// Decides a universal consequence of a catalog theory.
pub fn run_gtc(job: &Job) -> Result<Verdict, GtcError> {
    let start = Instant::now();
    let t = theory(&job.theory)?;
    let conj = &job.conjecture;
    if !conj.is_closed() {
        return Err(GtcError::Input("conjecture has free variables".into()));
    }
    if !within(conj, &t.vocabulary) {
        return Err(GtcError::Input(format!("conjecture uses symbols outside the vocabulary of {}", t.name)));
    }
    let class = classify_fragment(conj);
    let Some(default) = default_semantics(&job.theory) else {
        let mut v = Verdict::new(
            Status::UnsupportedFragment,
            class,
            format!(
                "theory {} is not one of the catalog theories whose universal consequences reduce to a field kernel ({})",
                job.theory,
                SUPPORTED_THEORIES.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ")
            ),
        );
        v.time_ms = start.elapsed().as_millis() as u64;
        return Ok(v);
    };
    let semantics = if uses_order(conj) { Semantics::Ordered } else { job.options.semantics.unwrap_or(default) };
    let expanded = expand_defined_relations(conj);
    let expanded_class = classify_fragment(&expanded);
    if !expanded_class.is_universal() {
        let mut v = Verdict::new(
            Status::UnsupportedFragment,
            expanded_class,
            format!("the conjecture is not universal after expanding defined relations. {}", UNDECIDABILITY_NOTE),
        );
        v.semantics = Some(semantics);
        v.time_ms = start.elapsed().as_millis() as u64;
        return Ok(v);
    }
    let mut v = decide(&expanded, semantics, &job.options, 1)?;
    v.fragment = fragment_name(class).into();
    v.time_ms = start.elapsed().as_millis() as u64;
    Ok(v)
}

/// Translates a geometric sentence (Output I) and decides it when the
/// translation lies in a kernel fragment (Output II).
pub fn run_stm(phi: &Formula, semantics: Semantics, options: &Options) -> Result<Verdict, GtcError> {
    let start = Instant::now();
    if !phi.is_closed() {
        return Err(GtcError::Input("sentence has free variables".into()));
    }
    let semantics = if uses_order(phi) { Semantics::Ordered } else { semantics };
    let expanded = expand_defined_relations(phi);
    // Cohen–Hörmander handles one alternation; the Nullstellensatz route none
    let depth = match semantics {
        Semantics::Ordered => 2,
        Semantics::Unordered => 1,
    };
    let mut v = decide(&expanded, semantics, options, depth)?;
    v.fragment = fragment_name(classify_fragment(phi)).into();
    v.time_ms = start.elapsed().as_millis() as u64;
    Ok(v)
}

fn decide(f: &Formula, semantics: Semantics, options: &Options, max_depth: usize) -> Result<Verdict, GtcError> {
    let scheme = pick_scheme(f, semantics)?;
    let translation = translate_formula(&scheme, f)?;
    let mut v = Verdict::new(Status::Valid, classify_fragment(&translation), String::new());
    v.translation = Some(pretty(&translation));
    v.semantics = Some(semantics);
    v.scheme = Some(scheme.name.clone());
    let cex = if classify_fragment(&translation).is_universal() {
        find_counterexample(&translation, &options.sampling)
    } else {
        None
    };
    let reduced = translate_normalized(&scheme, f, semantics == Semantics::Ordered)?;
    let parts: Vec<Formula> = split_conjuncts(&nnf(&reduced)).iter().map(eliminate_solved).collect();
    if let Some(p) = parts.iter().find(|p| block_depth(p) > max_depth) {
        v.status = Status::UnsupportedFragment;
        v.report = format!(
            "the translation has a conjunct with {} quantifier blocks; the {} kernel accepts at most {}. {}",
            block_depth(p),
            kernel_name(semantics),
            max_depth,
            UNDECIDABILITY_NOTE
        );
        return Ok(v);
    }
    let mut notes = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let outcome = decide_part(part, semantics, options, cex.is_some(), &mut v.kernel)?;
        match outcome {
            PartOutcome::Valid => {}
            PartOutcome::Invalid => {
                v.status = Status::Invalid;
                v.counterexample = cex.clone();
                notes.push(format!("conjunct {} of {} fails", i + 1, parts.len()));
                break;
            }
            PartOutcome::Budget(what) => {
                v.status = Status::BudgetExceeded;
                v.counterexample = cex.clone();
                notes.push(format!("conjunct {} of {}: {}", i + 1, parts.len(), what));
                break;
            }
            PartOutcome::Unsupported(why) => {
                v.status = Status::UnsupportedFragment;
                notes.push(format!("conjunct {} of {}: {}", i + 1, parts.len(), why));
                break;
            }
        }
    }
    v.kernel.dedup();
    if v.status == Status::Valid {
        if let Some(c) = &cex {
            return Err(GtcError::Kernel(PolyError::Internal(format!("kernel proved a sentence falsified at {:?}", c))));
        }
    }
    if v.status == Status::Valid {
        notes.push(format!("{} conjunct(s) decided", parts.len()));
    }
    if v.status == Status::Invalid && v.counterexample.is_none() {
        notes.push("no rational counterexample found by sampling".into());
    }
    v.report = notes.join("; ");
    Ok(v)
}

fn kernel_name(s: Semantics) -> &'static str {
    match s {
        Semantics::Ordered => "RCF",
        Semantics::Unordered => "ACF0",
    }
}

enum PartOutcome {
    Valid,
    Invalid,
    Budget(String),
    Unsupported(String),
}

fn decide_part(
    part: &Formula,
    semantics: Semantics,
    options: &Options,
    refuted: bool,
    kernels: &mut Vec<String>,
) -> Result<PartOutcome, GtcError> {
    let from = |d: Decision| match d {
        Decision::Valid => PartOutcome::Valid,
        Decision::Invalid => PartOutcome::Invalid,
    };
    let lift = |e: PolyError| match e {
        PolyError::Budget { what, limit } => Ok(PartOutcome::Budget(format!("{} budget of {} exceeded", what, limit))),
        PolyError::Fragment(m) => Ok(PartOutcome::Unsupported(m)),
        e => Err(GtcError::Kernel(e)),
    };
    let pair_budget = options.budget.unwrap_or(DEFAULT_PAIR_BUDGET);
    let node_budget = options.budget.unwrap_or(DEFAULT_NODE_BUDGET);
    match semantics {
        Semantics::Unordered => {
            kernels.push("acf0".into());
            acf0_decide_bounded(part, pair_budget).map(from).or_else(lift)
        }
        Semantics::Ordered => {
            // a universal truth of all fields of characteristic 0 holds in
            // every real closed field, so a Nullstellensatz proof settles it
            let order_free = !part.relation_symbols().iter().any(|r| r == "le" || r == "lt");
            if classify_fragment(part).is_universal() && order_free && !refuted {
                kernels.push("acf0".into());
                if let Ok(Decision::Valid) = acf0_decide_bounded(part, pair_budget) {
                    return Ok(PartOutcome::Valid);
                }
            }
            kernels.push("rcf".into());
            rcf_decide_bounded(part, node_budget).map(from).or_else(lift)
        }
    }
}
