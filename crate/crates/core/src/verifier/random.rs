use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::groebner::GradedIdeal;
use crate::monideal::MonomialIdeal;
use crate::ring::{Monomial, Polynomial, RingCtx, TermOrder};

/// Coefficients of random forms are drawn from `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// Forms with random coefficients on every monomial.
    DenseRandom,
    /// Random monomials.
    MonomialRandom,
    /// Closure of random monomials under `u -> x_i u / x_{m(u)}`, `i < m(u)`.
    StableRandom,
    /// Closure of random monomials under `u -> x_i u / x_j`, `i < j`.
    StronglyStableRandom,
    /// `min(gens, n)` dense forms of the top degree.
    CompleteIntersection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub n: usize,
    pub field: FieldSpec,
    pub gens: usize,
    pub min_degree: u32,
    pub max_degree: u32,
    pub shape: Shape,
}

impl IdealSpec {
    pub fn new(n: usize, gens: usize, degrees: (u32, u32), shape: Shape) -> Self {
        IdealSpec {
            n,
            field: FieldSpec::rationals(),
            gens,
            min_degree: degrees.0,
            max_degree: degrees.1,
            shape,
        }
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = field;
        self
    }

    pub fn ctx(&self) -> Result<RingCtx> {
        RingCtx::new(self.n, self.field)
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    let mut exps = vec![0u16; n];
    for _ in 0..d {
        exps[rng.random_range(0..n)] += 1;
    }
    Monomial::from_exponents(&exps)
}

/// All monomials reachable from `seeds` by the given exchange moves.
fn closure(seeds: Vec<Monomial>, strongly: bool) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = seeds.iter().cloned().collect();
    let mut stack = seeds;
    while let Some(u) = stack.pop() {
        let n = u.nvars();
        let sources: Vec<usize> = if strongly {
            (0..n).filter(|&j| u.exponent(j) > 0).collect()
        } else {
            match u.max_index() {
                0 => Vec::new(),
                m => vec![m - 1],
            }
        };
        for j in sources {
            for i in 0..j {
                let v = u.div_var(j).unwrap().mul_var(i);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    seen.into_iter().collect()
}

fn random_form(ctx: &RingCtx, rng: &mut ChaCha8Rng, d: u32) -> Polynomial {
    let field = ctx.field();
    loop {
        let terms = Monomial::all_of_degree(ctx.n(), d)
            .into_iter()
            .map(|m| {
                (
                    m,
                    field.from_i64(rng.random_range(-COEFF_BOUND..=COEFF_BOUND)),
                )
            })
            .collect();
        let f = Polynomial::from_terms(TermOrder::DegRevLex, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A monomial ideal of one of the monomial shapes; deterministic per seed.
pub fn random_monomial_ideal(spec: &IdealSpec, seed: u64) -> Result<MonomialIdeal> {
    let ctx = spec.ctx()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<Monomial> = (0..spec.gens)
        .map(|_| {
            let d = rng.random_range(spec.min_degree..=spec.max_degree);
            random_monomial(&mut rng, spec.n, d)
        })
        .collect();
    let mons = match spec.shape {
        Shape::MonomialRandom => seeds,
        Shape::StableRandom => closure(seeds, false),
        Shape::StronglyStableRandom => closure(seeds, true),
        _ => {
            return Err(Error::Precondition(format!(
                "{:?} does not describe a monomial ideal",
                spec.shape
            )))
        }
    };
    Ok(MonomialIdeal::new(ctx, mons))
}

/// A random graded ideal; deterministic per seed.
pub fn random_ideal(spec: &IdealSpec, seed: u64) -> Result<GradedIdeal> {
    if spec.min_degree == 0 || spec.min_degree > spec.max_degree {
        return Err(Error::Precondition(
            "degree range must satisfy 1 <= lo <= hi".into(),
        ));
    }
    let ctx = spec.ctx()?;
    if spec.max_degree > ctx.degree_guard() {
        return Err(Error::DegreeGuard {
            degree: spec.max_degree,
            guard: ctx.degree_guard(),
        });
    }
    match spec.shape {
        Shape::DenseRandom => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let gens = (0..spec.gens)
                .map(|_| {
                    let d = rng.random_range(spec.min_degree..=spec.max_degree);
                    random_form(&ctx, &mut rng, d)
                })
                .collect();
            GradedIdeal::new(ctx, gens)
        }
        Shape::CompleteIntersection => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let gens = (0..spec.gens.min(spec.n))
                .map(|_| random_form(&ctx, &mut rng, spec.max_degree))
                .collect();
            GradedIdeal::new(ctx, gens)
        }
        _ => Ok(random_monomial_ideal(spec, seed)?.to_graded()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{hilbert_function, initial_ideal};

    #[test]
    fn shapes_have_their_properties() {
        for seed in 0..20 {
            let ss = IdealSpec::new(4, 3, (2, 4), Shape::StronglyStableRandom);
            assert!(random_monomial_ideal(&ss, seed)
                .unwrap()
                .is_strongly_stable());
            let st = IdealSpec::new(4, 3, (2, 4), Shape::StableRandom);
            assert!(random_monomial_ideal(&st, seed).unwrap().is_stable());
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let spec = IdealSpec::new(3, 2, (2, 3), Shape::DenseRandom);
        assert_eq!(
            random_ideal(&spec, 4).unwrap().gens(),
            random_ideal(&spec, 4).unwrap().gens()
        );
        assert_ne!(
            random_ideal(&spec, 4).unwrap().gens(),
            random_ideal(&spec, 5).unwrap().gens()
        );
    }

    #[test]
    fn complete_intersection_hilbert_function() {
        // prod (1 - t^2)^3 / (1 - t)^3 = (1 + t)^3
        let spec = IdealSpec::new(3, 3, (2, 2), Shape::CompleteIntersection);
        let i = random_ideal(&spec, 1).unwrap();
        let j = initial_ideal(&i, TermOrder::DegRevLex).unwrap();
        assert_eq!(hilbert_function(&j, 5), vec![1, 3, 3, 1, 0, 0]);
    }
}
