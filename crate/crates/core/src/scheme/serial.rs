use super::{RelDef, SchemeError, SortDef, TranslationScheme};
use crate::formula::sexpr::{self, SExpr};
use crate::formula::{formula_from_sexpr, vocab, Var, Vocabulary};

fn var_list(vs: &[Var], default: Option<&str>) -> String {
    let items: Vec<String> = vs
        .iter()
        .map(|v| if Some(v.sort.as_str()) == default { v.name.clone() } else { format!("({} {})", v.name, v.sort) })
        .collect();
    format!("({})", items.join(" "))
}

/// Renders a scheme in its s-expression form.
pub fn scheme_to_sexpr(phi: &TranslationScheme) -> String {
    let default = (phi.source.sorts.len() == 1).then(|| phi.source.sorts[0].as_str());
    let mut out = format!("(scheme {}\n  (source {})\n  (target {})", phi.name, phi.source.name, phi.target.name);
    for d in &phi.sorts {
        out += &format!("\n  (dim {} {})", d.sort, d.components.len());
        out += &format!("\n  (universe {} {} {})", d.sort, var_list(&d.components, default), d.universe);
        if let Some((l, r, f)) = &d.equality {
            out += &format!("\n  (eq {} ({} {}) {})", d.sort, var_list(l, default), var_list(r, default), f);
        }
    }
    for r in &phi.relations {
        let ps: Vec<String> = r.params.iter().map(|p| var_list(p, default)).collect();
        out += &format!("\n  (rel {} ({}) {})", r.name, ps.join(" "), r.formula);
    }
    out + ")\n"
}

fn parse_vars(e: &SExpr, src: &Vocabulary) -> Result<Vec<Var>, SchemeError> {
    let items = e.list().ok_or_else(|| e.error("expected a variable list"))?;
    let default = (src.sorts.len() == 1).then(|| src.sorts[0].clone());
    items
        .iter()
        .map(|it| match it {
            SExpr::Atom(n, _) => {
                let s = default.clone().ok_or_else(|| it.error("sort required for a many-sorted source"))?;
                Ok(Var::new(n.clone(), &s))
            }
            SExpr::List(p, _) if p.len() == 2 => {
                let (n, s) = (p[0].atom(), p[1].atom());
                match (n, s.and_then(|s| src.sort(s))) {
                    (Some(n), Some(s)) => Ok(Var::new(n, s)),
                    _ => Err(it.error("expected (name Sort)").into()),
                }
            }
            _ => Err(it.error("expected a variable").into()),
        })
        .collect()
}

/// Reads a scheme written by [`scheme_to_sexpr`]; vocabularies are looked up by name.
pub fn scheme_from_sexpr(text: &str) -> Result<TranslationScheme, SchemeError> {
    let e = sexpr::read_one(text)?;
    let items = e.list().ok_or_else(|| e.error("expected (scheme ...)"))?;
    if items.first().and_then(|h| h.atom()) != Some("scheme") || items.len() < 2 {
        return Err(e.error("expected (scheme NAME ...)").into());
    }
    let name = items[1].atom().ok_or_else(|| items[1].error("scheme name"))?.to_string();
    let mut source = None;
    let mut target = None;
    let mut sorts: Vec<SortDef> = Vec::new();
    let mut relations = Vec::new();
    let mut dims: Vec<(String, usize)> = Vec::new();
    for it in &items[2..] {
        let parts = it.list().ok_or_else(|| it.error("expected a clause"))?;
        let head = it.head().ok_or_else(|| it.error("expected a clause keyword"))?;
        let need_src = || source.clone().ok_or_else(|| SchemeError::from(it.error("source must come first")));
        let atom_at = |i: usize| parts.get(i).and_then(|p| p.atom()).ok_or_else(|| SchemeError::from(it.error("malformed clause")));
        match head {
            "source" | "target" => {
                let v = vocab::by_name(atom_at(1)?).ok_or_else(|| it.error("unknown vocabulary"))?;
                if head == "source" {
                    source = Some(v);
                } else {
                    target = Some(v);
                }
            }
            "dim" => {
                let k = atom_at(2)?.parse().map_err(|_| it.error("dimension must be a number"))?;
                dims.push((atom_at(1)?.to_string(), k));
            }
            "universe" => {
                let src = need_src()?;
                let comps = parse_vars(parts.get(2).ok_or_else(|| it.error("components"))?, &src)?;
                let f = formula_from_sexpr(parts.get(3).ok_or_else(|| it.error("formula"))?, &src, &comps)?;
                sorts.push(SortDef { sort: atom_at(1)?.to_string(), components: comps, universe: f, equality: None });
            }
            "eq" => {
                let src = need_src()?;
                let sort = atom_at(1)?;
                let pair = parts.get(2).and_then(|p| p.list()).filter(|p| p.len() == 2).ok_or_else(|| it.error("expected two component lists"))?;
                let (l, r) = (parse_vars(&pair[0], &src)?, parse_vars(&pair[1], &src)?);
                let free: Vec<Var> = l.iter().chain(&r).cloned().collect();
                let f = formula_from_sexpr(parts.get(3).ok_or_else(|| it.error("formula"))?, &src, &free)?;
                let d = sorts.iter_mut().find(|d| d.sort == sort).ok_or_else(|| it.error("eq before universe"))?;
                d.equality = Some((l, r, f));
            }
            "rel" => {
                let src = need_src()?;
                let lists = parts.get(2).and_then(|p| p.list()).ok_or_else(|| it.error("expected parameter lists"))?;
                let params = lists.iter().map(|p| parse_vars(p, &src)).collect::<Result<Vec<_>, _>>()?;
                let free: Vec<Var> = params.iter().flatten().cloned().collect();
                let f = formula_from_sexpr(parts.get(3).ok_or_else(|| it.error("formula"))?, &src, &free)?;
                relations.push(RelDef { name: atom_at(1)?.to_string(), params, formula: f });
            }
            _ => return Err(it.error(format!("unknown clause `{}`", head)).into()),
        }
    }
    let (source, target) = match (source, target) {
        (Some(s), Some(t)) => (s, t),
        _ => return Err(e.error("source and target are required").into()),
    };
    for (s, k) in dims {
        if sorts.iter().find(|d| d.sort == s).map(|d| d.components.len()) != Some(k) {
            return Err(SchemeError::Malformed(format!("dimension of {} does not match its components", s)));
        }
    }
    let phi = TranslationScheme { name, source, target, sorts, relations };
    phi.validate()?;
    Ok(phi)
}
