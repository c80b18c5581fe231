//! Generic initial ideals by random coordinate changes, certified by
//! agreement of independent trials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{rank, DenseMatrix, Scalar};
use crate::groebner::{initial_ideal, GradedIdeal};
use crate::monideal::MonomialIdeal;
use crate::ring::{LinearChange, Polynomial, RingCtx, TermOrder};

/// Default bound `B` on the entries of random matrices.
pub const DEFAULT_BOUND: i64 = 1000;
/// Default number of agreeing trials.
pub const DEFAULT_TRIALS: usize = 3;

/// Stream reserved for [`generic_linear_forms`]; trials use streams `1..`.
const FORMS_STREAM: u64 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GinOptions {
    pub trials: usize,
    pub bound: i64,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_BOUND,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GinResult {
    pub ideal: MonomialIdeal,
    pub order: TermOrder,
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
    pub agreed: bool,
    pub warnings: Vec<String>,
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// An `n x n` matrix with entries uniform in `[-bound, bound]`, redrawn until
/// invertible over the field of `ctx` with no zero entry.
pub fn random_invertible_matrix(ctx: &RingCtx, rng: &mut impl Rng, bound: i64) -> DenseMatrix {
    let n = ctx.n();
    let field = ctx.field();
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| field.from_i64(rng.random_range(-bound..=bound)))
                    .collect()
            })
            .collect();
        if rows.iter().flatten().any(Scalar::is_zero) {
            continue;
        }
        let m = DenseMatrix::from_rows(field, rows);
        if rank(&m) == n {
            return m;
        }
    }
}

/// The random coordinate change used by trial `trial` (0-based).
pub fn trial_change(ctx: &RingCtx, seed: u64, trial: usize, bound: i64) -> LinearChange {
    let mut rng = rng_for(seed, trial as u64 + 1);
    LinearChange::new(random_invertible_matrix(ctx, &mut rng, bound)).expect("matrix is invertible")
}

/// The first `count` rows of a random invertible matrix, as linear forms.
pub fn generic_linear_forms(ctx: &RingCtx, count: usize, seed: u64) -> Vec<Polynomial> {
    generic_linear_forms_with(ctx, count, seed, DEFAULT_BOUND)
}

pub fn generic_linear_forms_with(
    ctx: &RingCtx,
    count: usize,
    seed: u64,
    bound: i64,
) -> Vec<Polynomial> {
    assert!(count <= ctx.n(), "at most n linearly independent forms");
    let mut rng = rng_for(seed, FORMS_STREAM);
    let m = random_invertible_matrix(ctx, &mut rng, bound);
    (0..count)
        .map(|i| Polynomial::linear_form(ctx, TermOrder::DegRevLex, m.row(i)))
        .collect()
}

/// Initial ideals of `I` after each trial's coordinate change.
pub fn gin_candidates(
    ideal: &GradedIdeal,
    order: TermOrder,
    seed: u64,
    opts: &GinOptions,
) -> Result<Vec<MonomialIdeal>> {
    if opts.trials == 0 {
        return Err(Error::Precondition("at least one trial is required".into()));
    }
    (0..opts.trials)
        .into_par_iter()
        .map(|t| {
            let g = trial_change(ideal.ctx(), seed, t, opts.bound);
            initial_ideal(&ideal.apply_change(&g), order)
        })
        .collect()
}

/// `Gin(I)` with respect to `order` with the default options.
pub fn generic_initial_ideal(
    ideal: &GradedIdeal,
    order: TermOrder,
    seed: u64,
) -> Result<GinResult> {
    generic_initial_ideal_with(ideal, order, seed, &GinOptions::default())
}

/// `Gin(I)`: all trials must produce the same initial ideal.
pub fn generic_initial_ideal_with(
    ideal: &GradedIdeal,
    order: TermOrder,
    seed: u64,
    opts: &GinOptions,
) -> Result<GinResult> {
    let cands = gin_candidates(ideal, order, seed, opts)?;
    if cands.iter().any(|c| c != &cands[0]) {
        return Err(Error::GinDisagreement {
            seed,
            trials: opts.trials,
        });
    }
    let gin = cands.into_iter().next().unwrap();
    let mut warnings = Vec::new();
    if ideal.ctx().field().is_char_zero() {
        if !gin.is_strongly_stable() {
            warnings.push("agreed gin is not strongly stable; genericity is doubtful".into());
        }
    } else {
        warnings.push(format!(
            "computed over {}; Borel-fixedness and gin theory are only guaranteed in characteristic 0",
            ideal.ctx().field()
        ));
    }
    Ok(GinResult {
        ideal: gin,
        order,
        trials: opts.trials,
        seed,
        bound: opts.bound,
        agreed: true,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::groebner::hilbert_function;

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn forms_are_deterministic_and_independent() {
        let c = ctx(3);
        let a = generic_linear_forms(&c, 3, 7);
        assert_eq!(a, generic_linear_forms(&c, 3, 7));
        assert_ne!(a, generic_linear_forms(&c, 3, 8));
        let rows: Vec<Vec<Scalar>> = a
            .iter()
            .map(|f| {
                (0..3)
                    .map(|i| {
                        f.coefficient(&c.var(i))
                            .cloned()
                            .unwrap_or(c.field().zero())
                    })
                    .collect()
            })
            .collect();
        assert_eq!(rank(&DenseMatrix::from_rows(c.field(), rows)), 3);
        let one = generic_linear_forms(&ctx(1), 1, 3);
        assert_eq!(one[0].len(), 1);
        assert!(!one[0].is_zero());
    }

    #[test]
    fn principal_ideal() {
        let c = ctx(3);
        let i = GradedIdeal::parse(&c, &["x2*x3^2 - x3^3"]).unwrap();
        let g = generic_initial_ideal(&i, TermOrder::DegRevLex, 1).unwrap();
        assert_eq!(g.ideal.to_string(), "(x1^3)");
        assert!(g.warnings.is_empty());
    }

    #[test]
    fn first_example_gin() {
        let c = ctx(3);
        let i = GradedIdeal::parse(
            &c,
            &["x1^2", "x2^2", "x1*x2*x3", "x1*x3^2", "x2*x3^2", "x3^3"],
        )
        .unwrap();
        let g = generic_initial_ideal(&i, TermOrder::DegRevLex, 11).unwrap();
        let expected = MonomialIdeal::parse(&c, &["x1^2", "x1*x2"])
            .unwrap()
            .sum(&MonomialIdeal::maximal_power(&c, 3));
        assert_eq!(g.ideal, expected);
    }

    #[test]
    fn strongly_stable_is_fixed() {
        let c = ctx(3);
        let i = MonomialIdeal::parse(&c, &["x1^2", "x1*x2", "x2^3", "x1*x3^2"]).unwrap();
        assert!(i.is_strongly_stable());
        let g = generic_initial_ideal(&i.to_graded(), TermOrder::DegRevLex, 5).unwrap();
        assert_eq!(g.ideal, i);
        let gg = generic_initial_ideal(&g.ideal.to_graded(), TermOrder::DegRevLex, 6).unwrap();
        assert_eq!(gg.ideal, g.ideal);
    }

    #[test]
    fn trials_share_hilbert_function() {
        let c = ctx(3);
        let i = GradedIdeal::parse(&c, &["x1^2 + x2*x3", "x2^2 - x1*x3"]).unwrap();
        let cands = gin_candidates(&i, TermOrder::Lex, 3, &GinOptions::default()).unwrap();
        let hf0 = hilbert_function(&cands[0], 6);
        for cand in &cands {
            assert_eq!(hilbert_function(cand, 6), hf0);
        }
    }

    #[test]
    fn prime_field_carries_caveat() {
        let c = RingCtx::new(2, FieldSpec::prime(32003).unwrap()).unwrap();
        let i = GradedIdeal::parse(&c, &["x1^2", "x2^2"]).unwrap();
        let g = generic_initial_ideal(&i, TermOrder::DegRevLex, 2).unwrap();
        assert_eq!(g.ideal.to_string(), "(x1^2, x1*x2, x2^3)");
        assert_eq!(g.warnings.len(), 1);
    }
}
