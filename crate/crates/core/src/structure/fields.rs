use serde::Serialize;

use super::{FiniteStructure, StructureError};
use crate::formula::{vocab, Theory};

pub const DEFAULT_PRIME_BOUND: u32 = 97;

/// A failed field law with the elements that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldAxiomViolation {
    pub axiom: String,
    pub witness: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// GF(p) with both the functional and the relational presentation.
pub fn build_prime_field(p: u32) -> Result<FiniteStructure, StructureError> {
    build_prime_field_bounded(p, DEFAULT_PRIME_BOUND)
}

pub fn build_prime_field_bounded(p: u32, bound: u32) -> Result<FiniteStructure, StructureError> {
    if !is_prime(p) {
        return Err(StructureError::Input(format!("{} is not prime", p)));
    }
    if p > bound {
        return Err(StructureError::Input(format!("prime {} exceeds the bound {}", p, bound)));
    }
    let n = p as usize;
    let add: Vec<u32> = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    let mul: Vec<u32> = (0..n * n).map(|i| ((i / n) * (i % n) % n) as u32).collect();
    from_tables(&format!("GF({})", p), n, add, mul, 0, 1)
}

/// Checks the field laws on explicit tables; returns zero and one.
pub fn verify_field_tables(n: usize, add: &[u32], mul: &[u32]) -> Result<(u32, u32), FieldAxiomViolation> {
    let bad = |axiom: &str, witness: Vec<u32>| FieldAxiomViolation { axiom: axiom.into(), witness };
    if n < 2 {
        return Err(bad("nontriviality", vec![]));
    }
    let e = |t: &[u32], a: u32, b: u32| t[a as usize * n + b as usize];
    let m = n as u32;
    for a in 0..m {
        for b in 0..m {
            if e(add, a, b) != e(add, b, a) {
                return Err(bad("add-commutativity", vec![a, b]));
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if e(add, e(add, a, b), c) != e(add, a, e(add, b, c)) {
                    return Err(bad("add-associativity", vec![a, b, c]));
                }
            }
        }
    }
    let zero = (0..m).find(|&z| (0..m).all(|a| e(add, a, z) == a)).ok_or_else(|| bad("add-identity", vec![]))?;
    for a in 0..m {
        if !(0..m).any(|b| e(add, a, b) == zero) {
            return Err(bad("add-inverse", vec![a]));
        }
    }
    for a in 0..m {
        for b in 0..m {
            if e(mul, a, b) != e(mul, b, a) {
                return Err(bad("mul-commutativity", vec![a, b]));
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if e(mul, e(mul, a, b), c) != e(mul, a, e(mul, b, c)) {
                    return Err(bad("mul-associativity", vec![a, b, c]));
                }
            }
        }
    }
    let one = (0..m).find(|&u| (0..m).all(|a| e(mul, a, u) == a)).ok_or_else(|| bad("mul-identity", vec![]))?;
    if one == zero {
        return Err(bad("nontriviality", vec![zero]));
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if e(mul, a, e(add, b, c)) != e(add, e(mul, a, b), e(mul, a, c)) {
                    return Err(bad("distributivity", vec![a, b, c]));
                }
            }
        }
    }
    for a in (0..m).filter(|&a| a != zero) {
        if !(0..m).any(|b| e(mul, a, b) == one) {
            return Err(bad("mul-inverse", vec![a]));
        }
    }
    Ok((zero, one))
}

fn from_tables(name: &str, n: usize, add: Vec<u32>, mul: Vec<u32>, zero: u32, one: u32) -> Result<FiniteStructure, StructureError> {
    let mut f = vocab::field();
    f.name = name.to_string();
    let mut s = FiniteStructure::new(f);
    s.set_carrier(vocab::ELEM, n)?;
    let m = n as u32;
    let idx = |a: u32, b: u32| a as usize * n + b as usize;
    let neg: Vec<u32> = (0..m).map(|a| (0..m).find(|&b| add[idx(a, b)] == zero).unwrap()).collect();
    // inv(0) is never consulted under guarded division; the table maps it to 0
    let inv: Vec<u32> =
        (0..m).map(|a| if a == zero { zero } else { (0..m).find(|&b| mul[idx(a, b)] == one).unwrap() }).collect();
    let sub: Vec<u32> = (0..n * n).map(|i| add[idx(i as u32 / m, neg[i % n])]).collect();
    for a in 0..m {
        for b in 0..m {
            s.insert("Add", vec![a, b, add[idx(a, b)]])?;
            s.insert("Mult", vec![a, b, mul[idx(a, b)]])?;
        }
    }
    s.set_function("add", add)?;
    s.set_function("mul", mul)?;
    s.set_function("neg", neg)?;
    s.set_function("inv", inv)?;
    s.set_function("sub", sub)?;
    s.set_units(zero, one);
    Ok(s)
}

/// Builds a field from explicit tables, rejecting tables that are not fields.
pub fn field_from_tables(name: &str, n: usize, add: Vec<u32>, mul: Vec<u32>) -> Result<FiniteStructure, StructureError> {
    if add.len() != n * n || mul.len() != n * n || add.iter().chain(&mul).any(|&v| v as usize >= n) {
        return Err(StructureError::Input("tables must be total with entries below the carrier size".into()));
    }
    let (zero, one) = verify_field_tables(n, &add, &mul).map_err(StructureError::NotAField)?;
    from_tables(name, n, add, mul, zero, one)
}

/// Parses the Cayley-table text format into name, size and both tables.
pub fn parse_cayley(text: &str) -> Result<(String, usize, Vec<u32>, Vec<u32>), StructureError> {
    let err = |line: usize, msg: &str| StructureError::Input(format!("cayley table line {}: {}", line, msg));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != "field" {
        return Err(err(ln, "expected `field <name> <size>`"));
    }
    let name = parts[1].to_string();
    let n: usize = parts[2].parse().map_err(|_| err(ln, "bad size"))?;
    let mut read_block = |label: &str| -> Result<Vec<u32>, StructureError> {
        let (ln, l) = lines.next().ok_or_else(|| err(0, &format!("missing `{}` block", label)))?;
        if l != label {
            return Err(err(ln, &format!("expected `{}`", label)));
        }
        let mut table = vec![None; n * n];
        for _ in 0..n * n {
            let (ln, l) = lines.next().ok_or_else(|| err(0, &format!("`{}` block too short", label)))?;
            let v: Vec<u32> = l
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| err(ln, "expected integers")))
                .collect::<Result<_, _>>()?;
            if v.len() != 3 || v.iter().any(|&x| x as usize >= n) {
                return Err(err(ln, "expected `a b c` with entries below the size"));
            }
            let slot = &mut table[v[0] as usize * n + v[1] as usize];
            if slot.is_some() {
                return Err(err(ln, "duplicate entry"));
            }
            *slot = Some(v[2]);
        }
        Ok(table.into_iter().map(|x| x.unwrap()).collect())
    };
    let add = read_block("add")?;
    let mul = read_block("mul")?;
    Ok((name, n, add, mul))
}

/// Loads a field from a Cayley-table file after checking the field laws.
pub fn load_cayley_field(text: &str) -> Result<FiniteStructure, StructureError> {
    let (name, n, add, mul) = parse_cayley(text)?;
    field_from_tables(&name, n, add, mul)
}

/// The field axioms in the functional language, plus agreement of the two presentations.
pub fn field_axioms() -> Theory {
    let axioms = [
        ("add-associativity", "(forall ((x Elem) (y Elem) (z Elem)) (= (add (add x y) z) (add x (add y z))))"),
        ("add-commutativity", "(forall ((x Elem) (y Elem)) (= (add x y) (add y x)))"),
        ("add-identity", "(forall ((x Elem)) (= (add x 0) x))"),
        ("add-inverse", "(forall ((x Elem)) (exists ((y Elem)) (= (add x y) 0)))"),
        ("mul-associativity", "(forall ((x Elem) (y Elem) (z Elem)) (= (mul (mul x y) z) (mul x (mul y z))))"),
        ("mul-commutativity", "(forall ((x Elem) (y Elem)) (= (mul x y) (mul y x)))"),
        ("mul-identity", "(forall ((x Elem)) (= (mul x 1) x))"),
        ("mul-inverse", "(forall ((x Elem)) (=> (not (= x 0)) (exists ((y Elem)) (= (mul x y) 1))))"),
        ("distributivity", "(forall ((x Elem) (y Elem) (z Elem)) (= (mul x (add y z)) (add (mul x y) (mul x z))))"),
        ("nontriviality", "(not (= 0 1))"),
        ("negation", "(forall ((x Elem)) (= (add x (neg x)) 0))"),
        ("subtraction", "(forall ((x Elem) (y Elem)) (= (sub x y) (add x (neg y))))"),
        ("inverse", "(forall ((x Elem)) (=> (not (= x 0)) (= (mul x (inv x)) 1)))"),
        ("add-relation", "(forall ((x Elem) (y Elem) (z Elem)) (and (=> (Add x y z) (= (add x y) z)) (=> (= (add x y) z) (Add x y z))))"),
        ("mul-relation", "(forall ((x Elem) (y Elem) (z Elem)) (and (=> (Mult x y z) (= (mul x y) z)) (=> (= (mul x y) z) (Mult x y z))))"),
    ];
    let mut t = Theory::new("field", vocab::field());
    for (name, text) in axioms {
        t = t.with_axiom(name, text).expect("field axiom parses");
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::structure::{eval_formula, Assignment};

    fn holds(s: &FiniteStructure, f: &str) -> bool {
        let f = parse_formula(f, &vocab::field()).unwrap();
        eval_formula(s, &f, &Assignment::new()).unwrap()
    }

    #[test]
    fn small_prime_fields() {
        let f2 = build_prime_field(2).unwrap();
        assert_eq!(f2.relation("Add").unwrap().len(), 4);
        assert!(holds(&f2, "(forall ((x Elem)) (= (mul x x) x))"));
        let f3 = build_prime_field(3).unwrap();
        assert!(f3.holds("Add", &[2, 2, 1]));
        assert!(holds(&f3, "(exists ((x Elem)) (= (add x x) 1))"));
        let f5 = build_prime_field(5).unwrap();
        assert!(f5.holds("Mult", &[2, 3, 1]));
    }

    #[test]
    fn non_primes_and_bound_rejected() {
        assert!(build_prime_field(4).is_err());
        assert!(build_prime_field(1).is_err());
        assert!(build_prime_field(101).is_err());
        assert!(build_prime_field_bounded(101, 101).is_ok());
    }

    #[test]
    fn numerals_follow_the_tables() {
        let f7 = build_prime_field(7).unwrap();
        assert!(holds(&f7, "(= 1/2 4)"));
        assert!(holds(&f7, "(= -1 6)"));
        assert!(holds(&f7, "(= 15 1)"));
        let f = parse_formula("(= 1/7 0)", &vocab::field()).unwrap();
        assert!(matches!(eval_formula(&f7, &f, &Assignment::new()), Err(StructureError::Numeral(_))));
    }

    #[test]
    fn ring_z4_rejected_for_missing_inverse() {
        let n = 4;
        let add: Vec<u32> = (0..16).map(|i| ((i / 4 + i % 4) % 4) as u32).collect();
        let mul: Vec<u32> = (0..16).map(|i| ((i / 4) * (i % 4) % 4) as u32).collect();
        match field_from_tables("Z4", n, add, mul) {
            Err(StructureError::NotAField(v)) => {
                assert_eq!(v.axiom, "mul-inverse");
                assert_eq!(v.witness, vec![2]);
            }
            other => panic!("{:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn noncommutative_addition_rejected() {
        let mut add: Vec<u32> = (0..9).map(|i| ((i / 3 + i % 3) % 3) as u32).collect();
        add[1] = 2; // 0 + 1 = 2 but 1 + 0 = 1
        let mul: Vec<u32> = (0..9).map(|i| ((i / 3) * (i % 3) % 3) as u32).collect();
        match field_from_tables("bad", 3, add, mul) {
            Err(StructureError::NotAField(v)) => assert_eq!(v.axiom, "add-commutativity"),
            other => panic!("{:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn cayley_parse_errors() {
        assert!(parse_cayley("").is_err());
        assert!(parse_cayley("field F 2\nadd\n0 0 0\n").is_err());
        assert!(parse_cayley("group G 2").is_err());
    }
}
