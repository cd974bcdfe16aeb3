use std::fmt;

use super::ast::{Formula, Quantifier, Term, Var};

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(&v.name),
            Term::Const(c) => f.write_str(c),
            Term::Num(n) => write!(f, "{}", n),
            Term::App(g, args) => {
                write!(f, "({}", g)?;
                for a in args {
                    write!(f, " {}", a)?;
                }
                f.write_str(")")
            }
        }
    }
}

fn binder_block(f: &Formula) -> Option<(Quantifier, Vec<&Var>, &Formula)> {
    let q = match f {
        Formula::Forall(..) => Quantifier::Forall,
        Formula::Exists(..) => Quantifier::Exists,
        _ => return None,
    };
    let mut vars = Vec::new();
    let mut cur = f;
    loop {
        match (q, cur) {
            (Quantifier::Forall, Formula::Forall(v, b)) | (Quantifier::Exists, Formula::Exists(v, b)) => {
                vars.push(v);
                cur = b;
            }
            _ => break,
        }
    }
    Some((q, vars, cur))
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => f.write_str("true"),
            Formula::False => f.write_str("false"),
            Formula::Eq(a, b) => write!(f, "(= {} {})", a, b),
            Formula::Rel(r, args) => {
                write!(f, "({}", r)?;
                for a in args {
                    write!(f, " {}", a)?;
                }
                f.write_str(")")
            }
            Formula::Not(g) => write!(f, "(not {})", g),
            Formula::And(gs) | Formula::Or(gs) => {
                f.write_str(if matches!(self, Formula::And(_)) { "(and" } else { "(or" })?;
                for g in gs {
                    write!(f, " {}", g)?;
                }
                f.write_str(")")
            }
            Formula::Implies(a, b) => write!(f, "(=> {} {})", a, b),
            Formula::Forall(..) | Formula::Exists(..) => {
                let (q, vars, body) = binder_block(self).unwrap();
                let kw = if q == Quantifier::Forall { "forall" } else { "exists" };
                write!(f, "({} (", kw)?;
                for (i, v) in vars.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "({} {})", v.name, v.sort)?;
                }
                write!(f, ") {})", body)
            }
        }
    }
}

/// Multi-line rendering with two-space indentation for connectives and binders.
pub fn pretty(f: &Formula) -> String {
    let mut out = String::new();
    pretty_into(f, 0, &mut out);
    out
}

fn pretty_into(f: &Formula, depth: usize, out: &mut String) {
    let flat = f.to_string();
    if flat.len() + depth * 2 <= 80 {
        out.push_str(&flat);
        return;
    }
    let pad = |d: usize| "  ".repeat(d);
    match f {
        Formula::Not(g) => {
            out.push_str("(not\n");
            out.push_str(&pad(depth + 1));
            pretty_into(g, depth + 1, out);
            out.push(')');
        }
        Formula::And(gs) | Formula::Or(gs) => {
            out.push_str(if matches!(f, Formula::And(_)) { "(and" } else { "(or" });
            for g in gs {
                out.push('\n');
                out.push_str(&pad(depth + 1));
                pretty_into(g, depth + 1, out);
            }
            out.push(')');
        }
        Formula::Implies(a, b) => {
            out.push_str("(=>");
            for g in [a, b] {
                out.push('\n');
                out.push_str(&pad(depth + 1));
                pretty_into(g, depth + 1, out);
            }
            out.push(')');
        }
        Formula::Forall(..) | Formula::Exists(..) => {
            let (q, vars, body) = binder_block(f).unwrap();
            let kw = if q == Quantifier::Forall { "forall" } else { "exists" };
            let bs: Vec<String> = vars.iter().map(|v| format!("({} {})", v.name, v.sort)).collect();
            out.push_str(&format!("({} ({})\n", kw, bs.join(" ")));
            out.push_str(&pad(depth + 1));
            pretty_into(body, depth + 1, out);
            out.push(')');
        }
        _ => out.push_str(&flat),
    }
}
