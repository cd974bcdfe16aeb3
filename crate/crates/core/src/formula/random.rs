//! Random relational sentences, for property tests and fuzzing.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Formula, Term, Var, Vocabulary};

/// A random closed formula over the relation symbols of `v` (functions are
/// not used) with quantifier rank at most `rank` and about `size` connectives.
pub fn random_sentence<R: Rng + ?Sized>(v: &Vocabulary, rank: usize, size: usize, rng: &mut R) -> Formula {
    let mut g = Gen { v, rng, counter: 0 };
    g.formula(rank, size, &mut Vec::new())
}

struct Gen<'a, R: ?Sized> {
    v: &'a Vocabulary,
    rng: &'a mut R,
    counter: usize,
}

impl<R: Rng + ?Sized> Gen<'_, R> {
    fn atom(&mut self, scope: &[Var]) -> Option<Formula> {
        let pick = |rng: &mut R, sort: &str| -> Option<Term> {
            let vs: Vec<&Var> = scope.iter().filter(|x| x.sort.as_str() == sort).collect();
            vs.choose(rng).map(|x| Term::Var((*x).clone()))
        };
        let usable: Vec<_> =
            self.v.relations.iter().filter(|r| r.args.iter().all(|s| scope.iter().any(|x| x.sort == *s))).collect();
        if !usable.is_empty() && (scope.is_empty() || self.rng.gen_bool(0.7)) {
            let r = *usable.choose(self.rng).unwrap();
            let args = r.args.iter().map(|s| pick(self.rng, s.as_str()).unwrap()).collect();
            return Some(Formula::rel(&r.name, args));
        }
        let x = scope.choose(self.rng)?.clone();
        let y = pick(self.rng, x.sort.as_str())?;
        Some(Formula::eq(Term::Var(x), y))
    }

    fn formula(&mut self, rank: usize, size: usize, scope: &mut Vec<Var>) -> Formula {
        if scope.is_empty() && rank > 0 {
            return self.quantified(rank, size, scope);
        }
        if size == 0 || self.rng.gen_bool(0.25) {
            return self.atom(scope).unwrap_or(Formula::True);
        }
        match self.rng.gen_range(0..6) {
            0 => Formula::not(self.formula(rank, size - 1, scope)),
            1..=3 => {
                let left = size / 2;
                let a = self.formula(rank, left, scope);
                let b = self.formula(rank, size - 1 - left, scope);
                match self.rng.gen_range(0..3) {
                    0 => Formula::And(vec![a, b]),
                    1 => Formula::Or(vec![a, b]),
                    _ => Formula::implies(a, b),
                }
            }
            _ if rank > 0 => self.quantified(rank, size, scope),
            _ => self.atom(scope).unwrap_or(Formula::False),
        }
    }

    fn quantified(&mut self, rank: usize, size: usize, scope: &mut Vec<Var>) -> Formula {
        let sort = self.v.sorts.choose(self.rng).expect("vocabulary has a sort").clone();
        self.counter += 1;
        let x = Var::new(format!("v{}", self.counter), &sort);
        scope.push(x.clone());
        let body = self.formula(rank - 1, size.saturating_sub(1), scope);
        scope.pop();
        if self.rng.gen_bool(0.5) {
            Formula::forall(x, body)
        } else {
            Formula::exists(x, body)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::vocab;
    use rand::SeedableRng;

    #[test]
    fn sentences_are_closed_and_ranked() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let v = vocab::incidence();
        for _ in 0..200 {
            let f = random_sentence(&v, 2, 6, &mut rng);
            assert!(f.is_closed(), "{}", f);
            assert!(f.quantifier_rank() <= 2, "{}", f);
        }
    }
}
