//! The analytic schemes: points are pairs `(x, y)` and lines are triples
//! `(a, b, c)` with `a·x + b·y + c = 0`, identified up to a nonzero factor.

use super::{RelDef, SortDef, TranslationScheme};
use crate::formula::{parse_formula_with, vocab, Formula, Sort, Var, Vocabulary};

fn vars(names: &[&str]) -> Vec<Var> {
    let e = Sort::new(vocab::ELEM);
    names.iter().map(|n| Var::new(*n, &e)).collect()
}

fn point(i: usize) -> Vec<Var> {
    vars(&[&format!("x{}", i), &format!("y{}", i)])
}

fn line(i: usize) -> Vec<Var> {
    vars(&[&format!("a{}", i), &format!("b{}", i), &format!("c{}", i)])
}

fn parse(text: &str, src: &Vocabulary, params: &[Vec<Var>]) -> Formula {
    let free: Vec<Var> = params.iter().flatten().cloned().collect();
    parse_formula_with(text, src, &free).unwrap_or_else(|e| panic!("scheme formula {}: {}", text, e))
}

fn same_line(i: usize, j: usize) -> String {
    format!(
        "(and (= (mul a{i} b{j}) (mul a{j} b{i})) (= (mul a{i} c{j}) (mul a{j} c{i})) (= (mul b{i} c{j}) (mul b{j} c{i})))"
    )
}

fn same_point(i: usize, j: usize) -> String {
    format!("(and (= x{i} x{j}) (= y{i} y{j}))")
}

fn sqdist(i: usize, j: usize) -> String {
    format!("(add (mul (sub x{i} x{j}) (sub x{i} x{j})) (mul (sub y{i} y{j}) (sub y{i} y{j})))")
}

fn sorts(src: &Vocabulary) -> Vec<SortDef> {
    vec![
        SortDef { sort: vocab::POINT.into(), components: vars(&["x", "y"]), universe: Formula::True, equality: None },
        SortDef {
            sort: vocab::LINE.into(),
            components: vars(&["a", "b", "c"]),
            universe: parse("(not (and (= a 0) (= b 0)))", src, &[vars(&["a", "b", "c"])]),
            equality: Some((line(1), line(2), parse(&same_line(1, 2), src, &[line(1), line(2)]))),
        },
    ]
}

fn incidence_defs(src: &Vocabulary) -> Vec<RelDef> {
    let inc = vec![point(1), line(1)];
    let par = vec![line(1), line(2)];
    vec![
        RelDef {
            name: "in".into(),
            formula: parse("(= (add (mul a1 x1) (mul b1 y1) c1) 0)", src, &inc),
            params: inc,
        },
        RelDef {
            name: "Par".into(),
            formula: parse(&format!("(and (= (mul a1 b2) (mul a2 b1)) (not {}))", same_line(1, 2)), src, &par),
            params: par,
        },
    ]
}

fn eq_def(src: &Vocabulary) -> RelDef {
    let ps: Vec<Vec<Var>> = (1..=4).map(point).collect();
    RelDef { name: "Eq".into(), formula: parse(&format!("(= {} {})", sqdist(1, 2), sqdist(3, 4)), src, &ps), params: ps }
}

fn or_def(src: &Vocabulary) -> RelDef {
    let ls = vec![line(1), line(2)];
    RelDef { name: "Or".into(), formula: parse("(= (add (mul a1 a2) (mul b1 b2)) 0)", src, &ls), params: ls }
}

/// Incidence only.
pub fn scheme_pp_in() -> TranslationScheme {
    let src = vocab::field();
    TranslationScheme {
        name: "pp-in".into(),
        sorts: sorts(&src),
        relations: incidence_defs(&src),
        source: src,
        target: vocab::incidence(),
    }
}

/// Incidence, equidistance and orthogonality.
pub fn scheme_pp_wu() -> TranslationScheme {
    let src = vocab::field();
    let mut relations = incidence_defs(&src);
    relations.push(eq_def(&src));
    relations.push(or_def(&src));
    TranslationScheme { name: "pp-wu".into(), sorts: sorts(&src), relations, source: src, target: vocab::wu() }
}

/// Incidence, betweenness, equidistance and equiangularity over an ordered field.
pub fn scheme_pp_hilbert() -> TranslationScheme {
    let src = vocab::ordered_field();
    let mut relations = incidence_defs(&src);
    let ps3: Vec<Vec<Var>> = (1..=3).map(point).collect();
    // on a line, P₂ lies strictly between P₁ and P₃ exactly when the
    // vectors P₁P₂ and P₂P₃ point the same way
    let det = "(sub (mul (sub x2 x1) (sub y3 y1)) (mul (sub x3 x1) (sub y2 y1)))";
    let be = format!(
        "(and (= {} 0) (lt 0 (add (mul (sub x2 x1) (sub x3 x2)) (mul (sub y2 y1) (sub y3 y2)))))",
        det
    );
    relations.push(RelDef { name: "Be".into(), formula: parse(&be, &src, &ps3), params: ps3 });
    relations.push(eq_def(&src));
    // angle at the middle point: equal unsigned angles have equal cos² and
    // dot products of the same sign
    let ps6: Vec<Vec<Var>> = (1..=6).map(point).collect();
    let dot = |a: usize, o: usize, b: usize| {
        format!("(add (mul (sub x{a} x{o}) (sub x{b} x{o})) (mul (sub y{a} y{o}) (sub y{b} y{o})))")
    };
    let (d1, d2) = (dot(1, 2, 3), dot(4, 5, 6));
    let an = format!(
        "(and (not {}) (not {}) (not {}) (not {}) (le 0 (mul {d1} {d2})) \
         (= (mul {d1} {d1} {} {}) (mul {d2} {d2} {} {})))",
        same_point(1, 2),
        same_point(3, 2),
        same_point(4, 5),
        same_point(6, 5),
        sqdist(4, 5),
        sqdist(6, 5),
        sqdist(1, 2),
        sqdist(3, 2),
    );
    relations.push(RelDef { name: "An".into(), formula: parse(&an, &src, &ps6), params: ps6 });
    TranslationScheme { name: "pp-hilbert".into(), sorts: sorts(&src), relations, source: src, target: vocab::hilbert() }
}

pub fn scheme_by_name(name: &str) -> Option<TranslationScheme> {
    match name {
        "pp-in" | "pp-incidence" => Some(scheme_pp_in()),
        "pp-wu" => Some(scheme_pp_wu()),
        "pp-hilbert" => Some(scheme_pp_hilbert()),
        _ => None,
    }
}
