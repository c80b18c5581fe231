use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{LinearChange, Polynomial, RingCtx, TermOrder};

/// An ideal given by nonzero homogeneous generators.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    ctx: RingCtx,
    gens: Vec<Polynomial>,
}

impl GradedIdeal {
    /// Drops zero generators; rejects inhomogeneous ones (by input index).
    pub fn new(ctx: RingCtx, gens: Vec<Polynomial>) -> Result<Self> {
        for (index, g) in gens.iter().enumerate() {
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous { index });
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedIdeal { ctx, gens })
    }

    pub fn parse(ctx: &RingCtx, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|g| ctx.parse(TermOrder::DegRevLex, g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx.clone(), polys)
    }

    pub fn zero(ctx: &RingCtx) -> Self {
        GradedIdeal {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(Polynomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(Polynomial::degree).max()
    }

    pub fn with_ctx(&self, ctx: RingCtx) -> Result<Self> {
        if !ctx.compatible(&self.ctx) {
            return Err(Error::RingMismatch("different variables or field".into()));
        }
        Ok(GradedIdeal {
            ctx,
            gens: self.gens.clone(),
        })
    }

    /// `I + (extra)`.
    pub fn plus(&self, extra: &[Polynomial]) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().map(|f| f.with_order(TermOrder::DegRevLex)));
        Self::new(self.ctx.clone(), gens)
    }

    /// Image of `I` under the substitution `g`.
    pub fn apply_change(&self, g: &LinearChange) -> Self {
        let gens = self.gens.iter().map(|f| g.apply(&self.ctx, f)).collect();
        GradedIdeal::new(self.ctx.clone(), gens).expect("linear changes preserve homogeneity")
    }

    pub fn fmt_gens(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| g.to_string_with(&self.ctx))
            .collect()
    }
}

impl fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.fmt_gens().join(", "))
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
