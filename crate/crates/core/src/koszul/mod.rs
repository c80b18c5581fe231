//! Graded Koszul homology of `S/I` along sequences of linear forms: Betti
//! tables, annihilator numbers, multiplication maps on homology and the
//! tests built on them.

mod complex;
mod multigraded;
mod quotient;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{rank, DenseMatrix, Scalar};
use crate::gin::generic_linear_forms;
use crate::groebner::{buchberger, initial_ideal, GradedIdeal};
use crate::monideal::{BettiConvention, BettiTable, MonomialIdeal};
use crate::ring::{LinearChange, Polynomial, RingCtx, TermOrder};
use complex::{subsets, KoszulComplex};
use quotient::{linear_coefficients, Quotient};

pub use quotient::quotient_multiplication_matrix;

/// Generic annihilator numbers `alpha_1..alpha_n` of `S/I` and the degree
/// window in which the degreewise kernels were summed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorProfile {
    pub alpha: Vec<u64>,
    pub window: u32,
    pub certified: bool,
}

/// Koszul homology of `S/I` along every prefix `y_1..y_b` of a sequence
/// `y_1..y_p`, in degrees `0..=window`.
#[derive(Clone, Debug, Serialize)]
pub struct KoszulReport {
    p: usize,
    window: u32,
    certified: bool,
    /// `h[b][i][d] = dim H_i(b)_d` for `0 <= i <= b`.
    h: Vec<Vec<Vec<u64>>>,
    /// `phi[b][i]`: rank of multiplication by `y_{b+1}` on `H_i(b)`, `b < p`.
    phi: Vec<Vec<u64>>,
    /// `annihilated[b][i]`: whether `m H_i(b) = 0`, for `b < p`; not tracked
    /// for `i = 0`.
    annihilated: Vec<Vec<bool>>,
    /// `alpha_1..alpha_p`.
    alpha: Vec<u64>,
}

impl KoszulReport {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn certified(&self) -> bool {
        self.certified
    }

    /// `dim H_i(y_1..y_b)_d`.
    pub fn h_deg(&self, i: usize, b: usize, d: u32) -> u64 {
        self.h
            .get(b)
            .and_then(|hb| hb.get(i))
            .and_then(|row| row.get(d as usize))
            .copied()
            .unwrap_or(0)
    }

    /// `h_i(b)`; only finite for `i >= 1`.
    pub fn h(&self, i: usize, b: usize) -> u64 {
        self.h
            .get(b)
            .and_then(|hb| hb.get(i))
            .map_or(0, |row| row.iter().sum())
    }

    /// `dim Im phi_{i,b}`, multiplication by `y_{b+1}` on `H_i(b)`.
    pub fn phi(&self, i: usize, b: usize) -> u64 {
        self.phi.get(b).and_then(|r| r.get(i)).copied().unwrap_or(0)
    }

    /// Whether `m H_i(b) = 0`, for `i >= 1` and `b < p`.
    pub fn annihilated(&self, i: usize, b: usize) -> bool {
        self.annihilated
            .get(b)
            .and_then(|r| r.get(i))
            .copied()
            .unwrap_or(true)
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    /// `sum_{j=1}^{p-i+1} C(p-j, i-1) alpha_j`.
    pub fn alpha_bound(&self, i: usize, p: usize) -> u64 {
        alpha_bound(&self.alpha, i, p)
    }

    /// The right-hand side of the exact identity for `h_i(p)`: the
    /// `alpha`-bound minus the `phi`-image corrections over
    /// `{(a,b): 1 <= b <= p-1, max(i-p+b, 1) <= a <= i}`.
    pub fn identity_rhs(&self, i: usize, p: usize) -> i64 {
        let mut v = self.alpha_bound(i, p) as i64;
        for (a, b) in correction_pairs(i, p) {
            v -= (binom(p - b, i - a) * self.phi(a, b)) as i64;
        }
        v
    }
}

fn binom(n: usize, k: usize) -> u64 {
    crate::ring::binomial(n as u64, k as u64)
}

/// `sum_{j=1}^{p-i+1} C(p-j, i-1) alpha_j`.
pub fn alpha_bound(alpha: &[u64], i: usize, p: usize) -> u64 {
    if i == 0 || i > p {
        return 0;
    }
    (1..=p - i + 1)
        .map(|j| binom(p - j, i - 1) * alpha.get(j - 1).copied().unwrap_or(0))
        .sum()
}

/// The index set `{(a,b): 1 <= b <= p-1, max(i-p+b, 1) <= a <= i}`.
pub fn correction_pairs(i: usize, p: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for b in 1..p {
        let lo = (i + b).saturating_sub(p).max(1);
        for a in lo..=i {
            out.push((a, b));
        }
    }
    out
}

fn unit_vectors(ctx: &RingCtx) -> Vec<Vec<Scalar>> {
    let (n, field) = (ctx.n(), ctx.field());
    (0..n)
        .map(|t| {
            (0..n)
                .map(|k| if k == t { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

fn check_forms(ideal: &GradedIdeal, forms: &[Polynomial]) -> Result<Vec<Vec<Scalar>>> {
    let ctx = ideal.ctx();
    let coeffs = forms
        .iter()
        .map(|y| linear_coefficients(ctx, y))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() > ctx.n() {
        return Err(Error::Precondition("more forms than variables".into()));
    }
    if !coeffs.is_empty() {
        let m = DenseMatrix::from_rows(ctx.field(), coeffs.clone());
        if rank(&m) < coeffs.len() {
            return Err(Error::Precondition("linear forms are dependent".into()));
        }
    }
    Ok(coeffs)
}

/// `I` after the coordinate change sending `y_k` to `x_{n+1-k}`, with the
/// coefficient vectors of those variables. Koszul homology, multiplication
/// maps and `m`-annihilation are carried over by the change, and the
/// differentials no longer mix the multiplication tables of all variables.
fn straighten(
    ideal: &GradedIdeal,
    coeffs: &[Vec<Scalar>],
) -> Result<(GradedIdeal, Vec<Vec<Scalar>>)> {
    let ctx = ideal.ctx();
    let (n, field) = (ctx.n(), ctx.field());
    let units = unit_vectors(ctx);
    let unit = |j: usize| units[j].clone();
    let mut rows = coeffs.to_vec();
    for j in 0..n {
        if rows.len() == n {
            break;
        }
        rows.push(unit(j));
        if rank(&DenseMatrix::from_rows(field, rows.clone())) < rows.len() {
            rows.pop();
        }
    }
    let inv = LinearChange::new(DenseMatrix::from_rows(field, rows))?.inverse();
    let target: Vec<Vec<Scalar>> = (0..n).map(|k| unit(n - 1 - k)).collect();
    let change = LinearChange::new(
        inv.matrix()
            .mul(&DenseMatrix::from_rows(field, target.clone())),
    )?;
    Ok((ideal.apply_change(&change), target[..coeffs.len()].to_vec()))
}

fn window_error(what: &str, window: u32) -> Error {
    Error::WindowTooShort(format!(
        "{what} does not vanish in degrees {} and {window}",
        window - 1
    ))
}

/// Koszul homology of `S/I` along `y_1..y_b` for every `b <= p`, in degrees
/// `0..=window`, with the multiplication maps and annihilation flags.
///
/// Homology in positive index and the kernels summed into `alpha` must vanish
/// in the two top degrees of the window.
pub fn koszul_homology(
    ideal: &GradedIdeal,
    forms: &[Polynomial],
    window: u32,
) -> Result<KoszulReport> {
    let (moved, coeffs) = straighten(ideal, &check_forms(ideal, forms)?)?;
    let q = Quotient::new(&moved, window + 1)?;
    // y_1..y_n spans the same space as x_1..x_n, so the full complex is
    // taken in the original coordinates, where coefficients stay small
    let full = if coeffs.len() == ideal.ctx().n() {
        Some(Quotient::new(ideal, window + 1)?)
    } else {
        None
    };
    homology_report(&q, &coeffs, window, usize::MAX, full.as_ref())
}

/// Prefix-by-prefix report; homological indices above `max_i` are skipped.
/// With `full`, the whole sequence is replaced by the variables of `full`.
fn homology_report(
    q: &Quotient,
    coeffs: &[Vec<Scalar>],
    window: u32,
    max_i: usize,
    full: Option<&Quotient>,
) -> Result<KoszulReport> {
    let p = coeffs.len();
    let window = window.max(1);
    struct Prefix {
        h: Vec<Vec<u64>>,
        phi: Vec<u64>,
        annihilated: Vec<bool>,
        alpha_next: Option<u64>,
    }
    let prefixes: Vec<Prefix> = (0..=p)
        .into_par_iter()
        .map(|b| {
            let mut kc = match full {
                Some(fq) if b == p => KoszulComplex::new(fq, unit_vectors(fq.ctx())),
                _ => KoszulComplex::new(q, coeffs[..b].to_vec()),
            };
            let top_i = b.min(max_i);
            let h: Vec<Vec<u64>> = (0..=top_i)
                .map(|i| (0..=window).map(|d| kc.homology(i, d)).collect())
                .collect();
            let mut phi = Vec::new();
            let mut alpha_next = None;
            if b < p {
                let y = &coeffs[b];
                for i in 0..=top_i {
                    let ranks: Vec<u64> = (0..=window).map(|d| kc.image_rank(i, d, y)).collect();
                    if i == 0 {
                        let kernels: Vec<u64> =
                            (0..=window as usize).map(|d| h[0][d] - ranks[d]).collect();
                        let tail = kernels[window as usize - 1] + kernels[window as usize];
                        alpha_next = if tail == 0 {
                            Some(kernels.iter().sum())
                        } else {
                            None
                        };
                    }
                    phi.push(ranks.iter().sum());
                }
            }
            let annihilated = if b < p {
                (0..=top_i)
                    .map(|i| i > 0 && (0..=window).all(|d| kc.killed_by_maxideal(i, d)))
                    .collect()
            } else {
                Vec::new()
            };
            Prefix {
                h,
                phi,
                annihilated,
                alpha_next,
            }
        })
        .collect();

    let mut report = KoszulReport {
        p,
        window,
        certified: true,
        h: Vec::with_capacity(p + 1),
        phi: Vec::with_capacity(p),
        annihilated: Vec::with_capacity(p + 1),
        alpha: Vec::with_capacity(p),
    };
    for (b, pre) in prefixes.into_iter().enumerate() {
        for (i, row) in pre.h.iter().enumerate().skip(1) {
            if row[window as usize - 1] != 0 || row[window as usize] != 0 {
                return Err(window_error(
                    &format!("H_{i} of a length-{b} prefix"),
                    window,
                ));
            }
        }
        if b < p {
            match pre.alpha_next {
                Some(a) => report.alpha.push(a),
                None => {
                    return Err(window_error(
                        &format!("the annihilator of y_{}", b + 1),
                        window,
                    ))
                }
            }
            report.phi.push(pre.phi);
        }
        report.h.push(pre.h);
        report.annihilated.push(pre.annihilated);
    }
    Ok(report)
}

/// Regularity of a monomial ideal; 0 for the zero and unit ideals.
fn monomial_regularity(j: &MonomialIdeal) -> u32 {
    if j.is_stable() {
        return j.max_degree().unwrap_or(0);
    }
    multigraded::multigraded_betti(j)
        .regularity()
        .map_or(0, |r| r.max(0) as u32)
}

/// `reg(in_revlex(I)) + n + 2`, an upper bound for the degrees in which the
/// Koszul homology of `S/I` along generic or variable sequences lives.
pub fn degree_cap(ideal: &GradedIdeal) -> Result<u32> {
    window_for(ideal.ctx(), &initial_ideal(ideal, TermOrder::DegRevLex)?)
}

/// `reg(J) + n + 2` for the initial ideal `J`, within the degree guard.
fn window_for(ctx: &RingCtx, j: &MonomialIdeal) -> Result<u32> {
    let cap = monomial_regularity(j) + ctx.n() as u32 + 2;
    let guard = ctx.degree_guard();
    if cap + 1 > guard {
        return Err(Error::DegreeGuard {
            degree: cap + 1,
            guard,
        });
    }
    Ok(cap)
}

/// Graded Betti numbers of `S/I` (quotient convention), as the homology of
/// the Koszul complex on `x_1..x_n`. Monomial ideals are handled one
/// multidegree at a time.
pub fn graded_betti(ideal: &GradedIdeal) -> Result<BettiTable> {
    if let Some(j) = MonomialIdeal::from_graded(ideal) {
        return Ok(multigraded::multigraded_betti(&j));
    }
    let ctx = ideal.ctx();
    let n = ctx.n();
    let gb = buchberger(ideal, TermOrder::DegRevLex)?;
    let window = window_for(ctx, &gb.initial_ideal())?;
    let q = Quotient::from_basis(gb, window + 1);
    let vars = unit_vectors(ctx);
    let homology: Vec<Vec<u64>> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let mut kc = KoszulComplex::new(&q, vars.clone());
            (0..=window).map(|d| kc.homology(i, d)).collect()
        })
        .collect();
    let mut table = BettiTable::new(BettiConvention::Quotient);
    for (i, row) in homology.iter().enumerate() {
        if row[window as usize - 1] != 0 || row[window as usize] != 0 {
            return Err(window_error(&format!("Tor_{i}"), window));
        }
        for (d, &v) in row.iter().enumerate() {
            if v > 0 {
                table.add(i, d as u32, v);
            }
        }
    }
    Ok(table)
}

/// Castelnuovo–Mumford regularity of `I`: `max(j - i)` over nonzero
/// `beta_{i,j}(I)`; 0 for the zero and unit ideals.
pub fn regularity(ideal: &GradedIdeal) -> Result<u32> {
    Ok(graded_betti(ideal)?
        .regularity()
        .map_or(0, |r| r.max(0) as u32))
}

/// Generic annihilator numbers of `S/I` for the forms drawn from `seed`.
pub fn annihilator_numbers(ideal: &GradedIdeal, seed: u64) -> Result<AnnihilatorProfile> {
    let forms = generic_linear_forms(ideal.ctx(), ideal.ctx().n(), seed);
    annihilator_numbers_with_forms(ideal, &forms)
}

/// `alpha_p = sum_d dim ker(y_p : Q_d -> Q_{d+1})` with
/// `Q = S/(I + (y_1..y_{p-1}))`, each `Q` from its own Gröbner basis.
pub fn annihilator_numbers_with_forms(
    ideal: &GradedIdeal,
    forms: &[Polynomial],
) -> Result<AnnihilatorProfile> {
    let coeffs = check_forms(ideal, forms)?;
    let window = degree_cap(ideal)?;
    let alpha = (0..forms.len())
        .into_par_iter()
        .map(|p| -> Result<u64> {
            let q = Quotient::new(&ideal.plus(&forms[..p])?, window + 1)?;
            let mut kernels = Vec::with_capacity(window as usize + 1);
            for d in 0..=window {
                let m = q.form_matrix(&coeffs[p], d);
                kernels.push(q.dim(d as i64) as u64 - rank(&m) as u64);
            }
            if kernels[window as usize] != 0 {
                return Err(Error::Genericity(format!(
                    "0 :_Q y_{} is not of finite length; re-seed",
                    p + 1
                )));
            }
            if kernels[window as usize - 1] != 0 {
                return Err(window_error(
                    &format!("the annihilator of y_{}", p + 1),
                    window,
                ));
            }
            Ok(kernels.iter().sum())
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(AnnihilatorProfile {
        alpha,
        window,
        certified: true,
    })
}

/// Kühl's criterion: `y_{p+1} H_1(p) = 0` for `p = 0..n-1` along the generic
/// forms drawn from `seed`.
pub fn is_proper_sequence(ideal: &GradedIdeal, seed: u64) -> Result<bool> {
    let forms = generic_linear_forms(ideal.ctx(), ideal.ctx().n(), seed);
    is_proper_sequence_with_forms(ideal, &forms)
}

pub fn is_proper_sequence_with_forms(ideal: &GradedIdeal, forms: &[Polynomial]) -> Result<bool> {
    let window = degree_cap(ideal)?;
    let (ideal, coeffs) = straighten(ideal, &check_forms(ideal, forms)?)?;
    let q = Quotient::new(&ideal, window + 1)?;
    let report = homology_report(&q, &coeffs, window, 1, None)?;
    Ok((1..forms.len()).all(|b| report.phi(1, b) == 0))
}

/// Whether every component ideal `I_<j>` has a linear resolution, for `j`
/// from the least generator degree up to `reg(I)`.
pub fn is_componentwise_linear(ideal: &GradedIdeal) -> Result<bool> {
    let lo = match ideal.min_degree() {
        Some(d) => d,
        None => return Ok(true),
    };
    let reg = regularity(ideal)?;
    let mono = MonomialIdeal::from_graded(ideal);
    let gb = match mono {
        Some(_) => None,
        None => Some(buchberger(ideal, TermOrder::DegRevLex)?),
    };
    for j in lo..=reg.max(lo) {
        let comp = match (&mono, &gb) {
            (Some(m), _) => m.component_ideal(j).to_graded(),
            (None, Some(gb)) => {
                let ctx = ideal.ctx();
                let lead = gb.initial_ideal();
                let gens = lead
                    .component_ideal(j)
                    .gens()
                    .iter()
                    .map(|u| {
                        let f = Polynomial::monomial(ctx, TermOrder::DegRevLex, u.clone());
                        f.sub(&gb.normal_form(&f))
                    })
                    .collect();
                GradedIdeal::new(ctx.clone(), gens)?
            }
            (None, None) => unreachable!(),
        };
        let t = graded_betti(&comp)?.to_ideal();
        if t.iter().any(|(i, d, _)| d as i64 - i as i64 != j as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every subset `A` of `{1..n}` (1-based), whether `m H_i(y_A) = 0`.
pub fn subset_homology_annihilation(
    ideal: &GradedIdeal,
    forms: &[Polynomial],
    i: usize,
) -> Result<BTreeMap<Vec<usize>, bool>> {
    if i == 0 {
        return Err(Error::Precondition(
            "homological index must be positive".into(),
        ));
    }
    Ok(subset_flags(ideal, forms, i, i)?.remove(0))
}

/// [`subset_homology_annihilation`] for `i = 1..=n`, at index `i - 1`.
pub fn subset_homology_annihilation_all(
    ideal: &GradedIdeal,
    forms: &[Polynomial],
) -> Result<Vec<BTreeMap<Vec<usize>, bool>>> {
    subset_flags(ideal, forms, 1, forms.len().max(1))
}

/// One Koszul complex per subset, shared by the levels `lo..=hi`.
fn subset_flags(
    ideal: &GradedIdeal,
    forms: &[Polynomial],
    lo: usize,
    hi: usize,
) -> Result<Vec<BTreeMap<Vec<usize>, bool>>> {
    let (coeffs, window) = (check_forms(ideal, forms)?, degree_cap(ideal)?);
    let n = coeffs.len();
    let full = if n == ideal.ctx().n() {
        Some(Quotient::new(ideal, window + 1)?)
    } else {
        None
    };
    let (moved, coeffs) = straighten(ideal, &coeffs)?;
    let q = Quotient::new(&moved, window + 1)?;
    let all: Vec<Vec<usize>> = (0..=n).flat_map(|k| subsets(n, k)).collect();
    let flags = all
        .par_iter()
        .map(|a| -> Result<Vec<bool>> {
            let mut kc = match &full {
                // the whole sequence spans the same space as the variables
                Some(fq) if a.len() == n => KoszulComplex::new(fq, unit_vectors(fq.ctx())),
                _ => KoszulComplex::new(&q, a.iter().map(|&k| coeffs[k].clone()).collect()),
            };
            (lo..=hi)
                .map(|i| {
                    if i > a.len() {
                        return Ok(true);
                    }
                    if kc.homology(i, window - 1) != 0 || kc.homology(i, window) != 0 {
                        return Err(window_error(&format!("H_{i} of a subsequence"), window));
                    }
                    Ok((0..=window).all(|d| kc.killed_by_maxideal(i, d)))
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<bool>>>>()?;
    Ok((lo..=hi)
        .map(|i| {
            all.iter()
                .zip(&flags)
                .map(|(a, f)| (a.iter().map(|k| k + 1).collect(), f[i - lo]))
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::monideal::ek_graded_betti;
    use crate::ring::RingCtx;

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> GradedIdeal {
        GradedIdeal::parse(&ctx(n), gens).unwrap()
    }

    #[test]
    fn pairs_index_set() {
        assert!(correction_pairs(1, 1).is_empty());
        assert_eq!(correction_pairs(1, 3), vec![(1, 1), (1, 2)]);
        assert_eq!(correction_pairs(2, 3), vec![(1, 1), (2, 1), (1, 2), (2, 2)]);
        assert_eq!(alpha_bound(&[3, 2, 1], 2, 3), 8);
    }

    #[test]
    fn multiplication_matrices() {
        let c = ctx(1);
        let z = GradedIdeal::zero(&c);
        let x = c.parse(TermOrder::DegRevLex, "x1").unwrap();
        let m = quotient_multiplication_matrix(&z, &x, 4).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(m.get(0, 0).is_one());
        let i = ideal(2, &["x1^2", "x2^2"]);
        let y = generic_linear_forms(i.ctx(), 1, 9).pop().unwrap();
        let m = quotient_multiplication_matrix(&i, &y, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn regular_sequence_is_acyclic() {
        let c = ctx(3);
        let forms = generic_linear_forms(&c, 3, 4);
        let r = koszul_homology(&GradedIdeal::zero(&c), &forms, 5).unwrap();
        for b in 1..=3 {
            for i in 1..=b {
                assert_eq!(r.h(i, b), 0);
            }
        }
        assert_eq!(r.alpha(), &[0, 0, 0]);
    }

    #[test]
    fn square_of_maximal_ideal() {
        let i = ideal(3, &["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]);
        let forms = generic_linear_forms(i.ctx(), 3, 1);
        let r = koszul_homology(&i, &forms, 6).unwrap();
        assert_eq!((r.h(1, 3), r.h(2, 3), r.h(3, 3)), (6, 8, 3));
        assert_eq!(r.alpha(), &[3, 2, 1]);
        for b in 1..=3 {
            for k in 1..=b {
                assert_eq!(r.h(k, b) as i64, r.identity_rhs(k, b));
                if b < 3 {
                    assert!(r.annihilated(k, b));
                }
            }
        }
    }

    #[test]
    fn complete_intersection_profile() {
        let i = ideal(2, &["x1^2", "x2^2"]);
        let a = annihilator_numbers(&i, 3).unwrap();
        assert_eq!(a.alpha, vec![2, 1]);
        assert!(!is_proper_sequence(&i, 3).unwrap());
        assert!(!is_componentwise_linear(&i).unwrap());
        assert_eq!(regularity(&i).unwrap(), 3);
        let r = koszul_homology(&i, &generic_linear_forms(i.ctx(), 2, 3), 6).unwrap();
        assert_eq!(r.alpha(), &[2, 1]);
        assert_eq!(r.h(1, 2), 2);
        assert!(r.h(1, 2) < r.alpha_bound(1, 2));
        assert_eq!(r.h(1, 2) as i64, r.identity_rhs(1, 2));
    }

    #[test]
    fn identity_and_recursions_on_a_dense_ideal() {
        let i = ideal(3, &["x1^2 + 2*x2*x3 - x3^2", "x1*x2 - 3*x3^2"]);
        let forms = generic_linear_forms(i.ctx(), 3, 21);
        let cap = degree_cap(&i).unwrap();
        let r = koszul_homology(&i, &forms, cap).unwrap();
        for p in 1..=3 {
            for k in 1..=p {
                assert_eq!(r.h(k, p) as i64, r.identity_rhs(k, p), "h_{k}({p})");
                assert!(r.h(k, p) <= r.alpha_bound(k, p));
            }
            assert_eq!(
                r.h(1, p),
                r.h(1, p - 1) + r.alpha()[p - 1] - r.phi(1, p - 1)
            );
            for k in 2..=p {
                assert_eq!(
                    r.h(k, p) + r.phi(k, p - 1) + r.phi(k - 1, p - 1),
                    r.h(k, p - 1) + r.h(k - 1, p - 1)
                );
            }
        }
        let a = annihilator_numbers_with_forms(&i, &forms).unwrap();
        assert_eq!(a.alpha, r.alpha());
    }

    #[test]
    fn betti_tables() {
        let i = ideal(1, &["x1"]);
        assert_eq!(graded_betti(&i).unwrap().to_ideal().totals(), vec![1]);
        let c = ctx(3);
        let ex = GradedIdeal::parse(
            &c,
            &["x1^2", "x2^2", "x1*x2*x3", "x1*x3^2", "x2*x3^2", "x3^3"],
        )
        .unwrap();
        let t = graded_betti(&ex).unwrap().to_ideal();
        assert_eq!(t.totals(), vec![6, 9, 4]);
        assert_eq!(t.row(0), vec![(2, 2), (3, 4)]);
        assert_eq!(t.row(1), vec![(4, 9)]);
        assert_eq!(t.row(2), vec![(5, 4)]);
        assert_eq!(regularity(&ex).unwrap(), 3);
        for d in 1..=3 {
            assert_eq!(
                regularity(&MonomialIdeal::maximal_power(&c, d).to_graded()).unwrap(),
                d
            );
        }
    }

    #[test]
    fn general_route_matches_monomial_route() {
        // a coordinate change of a stable ideal: same Betti table
        let c = ctx(3);
        let j = MonomialIdeal::parse(&c, &["x1^2", "x1*x2", "x2^2", "x1*x3"]).unwrap();
        let g = crate::gin::trial_change(&c, 5, 0, 3);
        let i = j.to_graded().apply_change(&g);
        assert!(MonomialIdeal::from_graded(&i).is_none());
        assert_eq!(
            graded_betti(&i).unwrap(),
            ek_graded_betti(&j).unwrap().to_quotient()
        );
    }

    #[test]
    fn componentwise_linearity() {
        let c = ctx(4);
        let ex = GradedIdeal::parse(&c, &["x1^2", "x1*x2", "x2^2", "x1*x3^2", "x1*x3*x4"]).unwrap();
        assert!(is_componentwise_linear(&ex).unwrap());
        let m2 = MonomialIdeal::maximal_power(&ctx(3), 2).to_graded();
        assert!(is_componentwise_linear(&m2).unwrap());
        assert!(is_proper_sequence(&m2, 1).unwrap());
        assert!(is_proper_sequence(&GradedIdeal::zero(&ctx(2)), 1).unwrap());
    }

    #[test]
    fn subset_flags() {
        let m2 = MonomialIdeal::maximal_power(&ctx(3), 2).to_graded();
        let forms = generic_linear_forms(m2.ctx(), 3, 2);
        let flags = subset_homology_annihilation(&m2, &forms, 1).unwrap();
        assert_eq!(flags.len(), 8);
        assert!(flags.values().all(|&f| f));
        assert!(flags[&Vec::new()]);
    }
}
