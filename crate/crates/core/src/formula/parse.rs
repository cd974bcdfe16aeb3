use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ast::{Formula, Term, Var};
use super::sexpr::{self, SExpr};
use super::vocab::{Sort, Vocabulary};
use super::FormulaError;

/// Parses a formula in the s-expression syntax, inferring the sorts of free
/// variables from their positions.
pub fn parse_formula(text: &str, vocab: &Vocabulary) -> Result<Formula, FormulaError> {
    parse_formula_with(text, vocab, &[])
}

/// Like [`parse_formula`] but with declared sorts for some free variables.
pub fn parse_formula_with(text: &str, vocab: &Vocabulary, free: &[Var]) -> Result<Formula, FormulaError> {
    let e = sexpr::read_one(text)?;
    formula_from_sexpr(&e, vocab, free)
}

pub fn formula_from_sexpr(e: &SExpr, vocab: &Vocabulary, free: &[Var]) -> Result<Formula, FormulaError> {
    let mut typer = Typer { vocab, free: BTreeMap::new(), strict: false };
    for v in free {
        typer.free.insert(v.name.clone(), v.sort.clone());
    }
    // Non-strict passes collect free-variable sorts until nothing changes.
    loop {
        let known = typer.free.len();
        let _ = typer.formula(e, &mut Vec::new());
        if typer.free.len() == known {
            break;
        }
    }
    typer.strict = true;
    typer.formula(e, &mut Vec::new())
}

/// Parses a term where the expected sort is known.
pub fn parse_term(text: &str, vocab: &Vocabulary, free: &[Var]) -> Result<Term, FormulaError> {
    let e = sexpr::read_one(text)?;
    let mut typer = Typer { vocab, free: BTreeMap::new(), strict: true };
    for v in free {
        typer.free.insert(v.name.clone(), v.sort.clone());
    }
    typer.term(&e, None, &mut Vec::new()).map(|(t, _)| t)
}

pub(crate) fn parse_numeral(s: &str) -> Option<BigRational> {
    let (body, neg) = match s.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (s, false),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.chars().all(|c| c.is_ascii_digit());
    if !digits(num) || !den.map_or(true, digits) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.map_or(Some(BigInt::from(1)), |d| d.parse().ok())?;
    if d.is_zero() {
        return None;
    }
    let r = BigRational::new(n, d);
    Some(if neg { -r } else { r })
}

struct Typer<'a> {
    vocab: &'a Vocabulary,
    free: BTreeMap<String, Sort>,
    /// In the second pass unresolved sorts and mismatches are errors.
    strict: bool,
}

const KEYWORDS: [&str; 9] = ["not", "and", "or", "=>", "forall", "exists", "=", "true", "false"];

impl<'a> Typer<'a> {
    fn formula(&mut self, e: &SExpr, bound: &mut Vec<Var>) -> Result<Formula, FormulaError> {
        match e {
            SExpr::Atom(a, _) => match a.as_str() {
                "true" => Ok(Formula::True),
                "false" => Ok(Formula::False),
                _ => Err(e.error(format!("expected a formula, found atom `{}`", a))),
            },
            SExpr::List(items, _) => {
                let head = items
                    .first()
                    .and_then(|h| h.atom())
                    .ok_or_else(|| e.error("formula must start with an operator or relation name"))?;
                let args = &items[1..];
                match head {
                    "not" => {
                        if args.len() != 1 {
                            return Err(e.error("`not` takes one argument"));
                        }
                        Ok(Formula::not(self.formula(&args[0], bound)?))
                    }
                    "and" | "or" => {
                        if args.is_empty() {
                            return Err(e.error(format!("`{}` needs at least one argument", head)));
                        }
                        let fs = args.iter().map(|a| self.formula(a, bound)).collect::<Result<Vec<_>, _>>()?;
                        Ok(if head == "and" { Formula::And(fs) } else { Formula::Or(fs) })
                    }
                    "=>" => {
                        if args.len() != 2 {
                            return Err(e.error("`=>` takes two arguments"));
                        }
                        let a = self.formula(&args[0], bound)?;
                        let b = self.formula(&args[1], bound)?;
                        Ok(Formula::implies(a, b))
                    }
                    "forall" | "exists" => self.quantified(e, head == "forall", args, bound),
                    "=" => {
                        if args.len() != 2 {
                            return Err(e.error("`=` takes two arguments"));
                        }
                        let (a, sa) = self.term(&args[0], None, bound)?;
                        let (b, sb) = self.term(&args[1], sa.as_ref(), bound)?;
                        // retry the left side with the right side's sort
                        let (a, sa) = if sa.is_none() && sb.is_some() {
                            self.term(&args[0], sb.as_ref(), bound)?
                        } else {
                            (a, sa)
                        };
                        match (&sa, &sb) {
                            (Some(x), Some(y)) if x != y => {
                                if self.strict {
                                    return Err(FormulaError::sort(
                                        "=",
                                        format!("cannot equate a {} with a {}", x, y),
                                    ));
                                }
                            }
                            (None, _) | (_, None) if self.strict => {
                                return Err(FormulaError::sort("=", "cannot infer the sort of the equated terms"));
                            }
                            _ => {}
                        }
                        Ok(Formula::Eq(a, b))
                    }
                    name => {
                        let rel = self
                            .vocab
                            .relation(name)
                            .ok_or_else(|| FormulaError::sort(name, "unknown relation symbol"))?
                            .clone();
                        if rel.args.len() != args.len() {
                            return Err(FormulaError::sort(
                                name,
                                format!("expects {} arguments, got {}", rel.args.len(), args.len()),
                            ));
                        }
                        let mut ts = Vec::new();
                        for (a, s) in args.iter().zip(&rel.args) {
                            let (t, got) = self.term(a, Some(s), bound)?;
                            if let Some(g) = got {
                                if &g != s && self.strict {
                                    return Err(FormulaError::sort(
                                        name,
                                        format!("argument `{}` has sort {}, expected {}", t_display(&t), g, s),
                                    ));
                                }
                            }
                            ts.push(t);
                        }
                        Ok(Formula::Rel(name.to_string(), ts))
                    }
                }
            }
        }
    }

    fn quantified(
        &mut self,
        e: &SExpr,
        universal: bool,
        args: &[SExpr],
        bound: &mut Vec<Var>,
    ) -> Result<Formula, FormulaError> {
        if args.len() != 2 {
            return Err(e.error("quantifier takes a binder list and a body"));
        }
        let binders = args[0].list().ok_or_else(|| args[0].error("expected binder list"))?;
        if binders.is_empty() {
            return Err(args[0].error("binder list must not be empty"));
        }
        let mut vars = Vec::new();
        for b in binders {
            let pair = b.list().ok_or_else(|| b.error("binder must be (var Sort)"))?;
            if pair.len() != 2 {
                return Err(b.error("binder must be (var Sort)"));
            }
            let name = pair[0].atom().ok_or_else(|| pair[0].error("variable name expected"))?;
            let sort_name = pair[1].atom().ok_or_else(|| pair[1].error("sort name expected"))?;
            if KEYWORDS.contains(&name) || parse_numeral(name).is_some() {
                return Err(pair[0].error(format!("`{}` cannot be used as a variable", name)));
            }
            let sort = self
                .vocab
                .sort(sort_name)
                .cloned()
                .ok_or_else(|| FormulaError::sort(sort_name, "unknown sort"))?;
            vars.push(Var::new(name, &sort));
        }
        let n = vars.len();
        bound.extend(vars.iter().cloned());
        let body = self.formula(&args[1], bound);
        bound.truncate(bound.len() - n);
        let body = body?;
        Ok(if universal { Formula::forall_many(vars, body) } else { Formula::exists_many(vars, body) })
    }

    fn term(
        &mut self,
        e: &SExpr,
        expected: Option<&Sort>,
        bound: &mut Vec<Var>,
    ) -> Result<(Term, Option<Sort>), FormulaError> {
        match e {
            SExpr::Atom(a, _) => {
                if let Some(v) = bound.iter().rev().find(|v| &v.name == a) {
                    return Ok((Term::Var(v.clone()), Some(v.sort.clone())));
                }
                if let Some(n) = parse_numeral(a) {
                    let s = self
                        .vocab
                        .numeric
                        .clone()
                        .ok_or_else(|| FormulaError::sort(a, "vocabulary has no numerals"))?;
                    return Ok((Term::Num(n), Some(s)));
                }
                if let Some(s) = self.vocab.constant(a) {
                    return Ok((Term::Const(a.clone()), Some(s.clone())));
                }
                if KEYWORDS.contains(&a.as_str()) {
                    return Err(e.error(format!("keyword `{}` used as a term", a)));
                }
                if let Some(s) = self.free.get(a) {
                    return Ok((Term::var(a, s), Some(s.clone())));
                }
                if let Some(s) = expected {
                    self.free.insert(a.clone(), s.clone());
                    return Ok((Term::var(a, s), Some(s.clone())));
                }
                if self.strict {
                    if self.vocab.sorts.len() == 1 {
                        let s = self.vocab.sorts[0].clone();
                        self.free.insert(a.clone(), s.clone());
                        return Ok((Term::var(a, &s), Some(s)));
                    }
                    return Err(FormulaError::sort(a, "cannot infer the sort of free variable"));
                }
                Ok((Term::var(a, &Sort::new("?")), None))
            }
            SExpr::List(items, _) => {
                let head = items
                    .first()
                    .and_then(|h| h.atom())
                    .ok_or_else(|| e.error("term application must start with a function name"))?;
                let f = self
                    .vocab
                    .function(head)
                    .ok_or_else(|| FormulaError::sort(head, "unknown function symbol"))?
                    .clone();
                let args = &items[1..];
                let arity_ok = if f.variadic { args.len() >= 2 } else { args.len() == f.args.len() };
                if !arity_ok {
                    return Err(FormulaError::sort(
                        head,
                        format!(
                            "expects {}{} arguments, got {}",
                            if f.variadic { "at least " } else { "" },
                            f.args.len(),
                            args.len()
                        ),
                    ));
                }
                let mut ts = Vec::new();
                for (i, a) in args.iter().enumerate() {
                    let want = if f.variadic { &f.args[0] } else { &f.args[i] };
                    let (t, got) = self.term(a, Some(want), bound)?;
                    if let Some(g) = got {
                        if &g != want && self.strict {
                            return Err(FormulaError::sort(
                                head,
                                format!("argument `{}` has sort {}, expected {}", t_display(&t), g, want),
                            ));
                        }
                    }
                    ts.push(t);
                }
                Ok((Term::App(head.to_string(), ts), Some(f.result.clone())))
            }
        }
    }
}

fn t_display(t: &Term) -> String {
    t.to_string()
}
