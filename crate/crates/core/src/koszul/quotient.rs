use std::collections::HashMap;

use crate::error::Result;
use crate::exactla::{DenseMatrix, FieldSpec, Scalar};
use crate::groebner::{buchberger, std_monomials, GradedIdeal, GroebnerBasis};
use crate::monideal::MonomialIdeal;
use crate::ring::{Monomial, Polynomial, RingCtx, TermOrder};

/// `S/I` in degrees `0..=top`: standard-monomial bases and the matrices of
/// multiplication by each variable.
pub(crate) struct Quotient {
    ctx: RingCtx,
    basis: Vec<Vec<Monomial>>,
    /// `var_mult[t][d]`: `Q_d -> Q_{d+1}` for `x_{t+1}`, `d < top`.
    var_mult: Vec<Vec<DenseMatrix>>,
}

impl Quotient {
    pub(crate) fn new(ideal: &GradedIdeal, top: u32) -> Result<Self> {
        let ctx = ideal.ctx().clone();
        let (gb, lead) = match MonomialIdeal::from_graded(ideal) {
            Some(m) => (None, m),
            None => {
                let gb = buchberger(ideal, TermOrder::DegRevLex)?;
                let lead = gb.initial_ideal();
                (Some(gb), lead)
            }
        };
        Ok(Self::build(ctx, gb, lead, top))
    }

    pub(crate) fn from_basis(gb: GroebnerBasis, top: u32) -> Self {
        let lead = gb.initial_ideal();
        Self::build(gb.ctx().clone(), Some(gb), lead, top)
    }

    fn build(ctx: RingCtx, gb: Option<GroebnerBasis>, lead: MonomialIdeal, top: u32) -> Self {
        let n = ctx.n();
        let field = ctx.field();
        let basis: Vec<Vec<Monomial>> = (0..=top).map(|d| std_monomials(&lead, d)).collect();
        let index: Vec<HashMap<Monomial, usize>> = basis
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect())
            .collect();
        let mut nf_cache: HashMap<Monomial, Vec<(usize, Scalar)>> = HashMap::new();
        let mut var_mult = vec![Vec::with_capacity(top as usize); n];
        for d in 0..top as usize {
            for (t, mats) in var_mult.iter_mut().enumerate() {
                let mut m = DenseMatrix::zeros(field, basis[d + 1].len(), basis[d].len());
                for (c, b) in basis[d].iter().enumerate() {
                    let prod = b.mul_var(t);
                    if let Some(&r) = index[d + 1].get(&prod) {
                        m.set(r, c, field.one());
                        continue;
                    }
                    let coords = nf_cache.entry(prod.clone()).or_insert_with(|| match &gb {
                        None => Vec::new(),
                        Some(gb) => {
                            let f = Polynomial::monomial(&ctx, TermOrder::DegRevLex, prod);
                            gb.normal_form(&f)
                                .terms()
                                .iter()
                                .map(|(mono, s)| (index[d + 1][mono], s.clone()))
                                .collect()
                        }
                    });
                    for (r, s) in coords.iter() {
                        m.set(*r, c, s.clone());
                    }
                }
                mats.push(m);
            }
        }
        Quotient {
            ctx,
            basis,
            var_mult,
        }
    }

    pub(crate) fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub(crate) fn field(&self) -> FieldSpec {
        self.ctx.field()
    }

    pub(crate) fn dim(&self, d: i64) -> usize {
        if d < 0 || d as usize >= self.basis.len() {
            return 0;
        }
        self.basis[d as usize].len()
    }

    /// Multiplication by `x_{t+1}` from degree `d`.
    pub(crate) fn var_matrix(&self, t: usize, d: u32) -> &DenseMatrix {
        &self.var_mult[t][d as usize]
    }

    /// Multiplication by the linear form `sum coeffs[t] x_{t+1}` from degree `d`.
    pub(crate) fn form_matrix(&self, coeffs: &[Scalar], d: u32) -> DenseMatrix {
        let field = self.field();
        let (rows, cols) = (self.dim(d as i64 + 1), self.dim(d as i64));
        let mut out = DenseMatrix::zeros(field, rows, cols);
        for (t, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = &self.var_mult[t][d as usize];
            for r in 0..rows {
                for k in 0..cols {
                    let v = m.get(r, k);
                    if !v.is_zero() {
                        let cur = out.get(r, k) + &(v * c);
                        out.set(r, k, cur);
                    }
                }
            }
        }
        out
    }
}

/// Matrix of multiplication by `y` from `(S/I)_d` to `(S/I)_{d+1}` in
/// standard-monomial bases (degrevlex).
pub fn quotient_multiplication_matrix(
    ideal: &GradedIdeal,
    y: &Polynomial,
    d: u32,
) -> Result<DenseMatrix> {
    let q = Quotient::new(ideal, d + 1)?;
    let coeffs = linear_coefficients(ideal.ctx(), y)?;
    Ok(q.form_matrix(&coeffs, d))
}

/// Coefficient vector of a linear form.
pub(crate) fn linear_coefficients(ctx: &RingCtx, y: &Polynomial) -> Result<Vec<Scalar>> {
    let mut v = vec![ctx.field().zero(); ctx.n()];
    for (m, c) in y.terms() {
        if m.degree() != 1 {
            return Err(crate::error::Error::Precondition(
                "expected a linear form".into(),
            ));
        }
        v[m.min_index() - 1] = c.clone();
    }
    Ok(v)
}
