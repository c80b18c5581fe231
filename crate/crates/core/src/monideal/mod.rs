//! Monomial ideals: minimal generators, stability, Eliahou–Kervaire Betti
//! numbers, component ideals and lex segments.

mod betti;
mod lex;

use std::collections::HashSet;
use std::fmt;

pub use betti::{
    cwl_graded_betti, ek_graded_betti, ek_total_betti, truncation_delta, BettiConvention,
    BettiEntry, BettiTable,
};
pub use lex::{lex_segment_ideal, lex_segment_ideal_with};

use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::koszul::AnnihilatorProfile;
use crate::ring::{Monomial, Polynomial, RingCtx, TermOrder};

/// A monomial ideal given by its minimal generators `G(I)`, sorted by degree
/// and then descending lex.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: RingCtx,
    gens: Vec<Monomial>,
}

/// `m_i(I)` and `m_{<=i}(I)` for `i = 0..=n`; index 0 counts the unit ideal's
/// generator `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MStats {
    pub m: Vec<u64>,
    pub m_le: Vec<u64>,
}

impl MStats {
    pub fn m(&self, i: usize) -> u64 {
        self.m.get(i).copied().unwrap_or(0)
    }

    pub fn m_le(&self, i: usize) -> u64 {
        let last = *self.m_le.last().unwrap_or(&0);
        self.m_le.get(i).copied().unwrap_or(last)
    }
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| TermOrder::Lex.compare(b, a))
}

/// Divisibility-minimal subset of `mons` in canonical order.
pub fn minimalize(ctx: &RingCtx, mons: Vec<Monomial>) -> MonomialIdeal {
    MonomialIdeal::new(ctx.clone(), mons)
}

impl MonomialIdeal {
    pub fn new(ctx: RingCtx, mut mons: Vec<Monomial>) -> Self {
        mons.sort_by(canonical_cmp);
        mons.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(mons.len());
        // after sorting by degree a monomial can only be divided by earlier ones
        for m in mons {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal { ctx, gens }
    }

    pub fn zero(ctx: &RingCtx) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    /// `m^d`.
    pub fn maximal_power(ctx: &RingCtx, d: u32) -> Self {
        Self::new(ctx.clone(), Monomial::all_of_degree(ctx.n(), d))
    }

    /// Parses monomial generators such as `"x1^2"`, `"x1*x3"`.
    pub fn parse(ctx: &RingCtx, gens: &[&str]) -> Result<Self> {
        let mut mons = Vec::with_capacity(gens.len());
        for g in gens {
            let p = ctx.parse(TermOrder::DegRevLex, g)?;
            match p.terms() {
                [(m, _)] => mons.push(m.clone()),
                [] => {}
                _ => {
                    return Err(Error::Precondition(format!("{g:?} is not a monomial")));
                }
            }
        }
        Ok(Self::new(ctx.clone(), mons))
    }

    /// The monomial ideal generated by `I`'s generators, if they are all
    /// monomials (coefficients are ignored).
    pub fn from_graded(ideal: &GradedIdeal) -> Option<Self> {
        let mut mons = Vec::new();
        for g in ideal.gens() {
            if !g.is_monomial() {
                return None;
            }
            mons.push(g.leading_monomial().unwrap().clone());
        }
        Some(Self::new(ideal.ctx().clone(), mons))
    }

    pub fn to_graded(&self) -> GradedIdeal {
        let gens = self
            .gens
            .iter()
            .map(|m| Polynomial::monomial(&self.ctx, TermOrder::DegRevLex, m.clone()))
            .collect();
        GradedIdeal::new(self.ctx.clone(), gens).expect("monomials are homogeneous")
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::degree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Monomials of degree `d` lying in the ideal, descending lex.
    pub fn degree_part(&self, d: u32) -> Vec<Monomial> {
        Monomial::all_of_degree(self.ctx.n(), d)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// Exchange condition `x_i u / x_{m(u)} ∈ I` for `i < m(u)`, on generators.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            let k = u.max_index();
            if k <= 1 {
                return true;
            }
            let v = u.div_var(k - 1).unwrap();
            (0..k - 1).all(|i| self.contains(&v.mul_var(i)))
        })
    }

    /// Exchange condition `x_i u / x_j ∈ I` for every `x_j | u` and `i < j`.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            (1..self.ctx.n()).all(|j| match u.div_var(j) {
                None => true,
                Some(v) => (0..j).all(|i| self.contains(&v.mul_var(i))),
            })
        })
    }

    pub fn stats(&self) -> MStats {
        let n = self.ctx.n();
        let mut m = vec![0u64; n + 1];
        for u in &self.gens {
            m[u.max_index()] += 1;
        }
        let mut m_le = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for v in &m {
            acc += v;
            m_le.push(acc);
        }
        MStats { m, m_le }
    }

    /// `I_<j>`: the ideal generated by the degree-`j` monomials of `I`.
    pub fn component_ideal(&self, j: u32) -> MonomialIdeal {
        let mut set: HashSet<Monomial> = HashSet::new();
        let n = self.ctx.n();
        for g in &self.gens {
            let d = g.degree();
            if d > j {
                continue;
            }
            for m in Monomial::all_of_degree(n, j - d) {
                set.insert(g.mul(&m));
            }
        }
        // all degree-j, hence already minimal
        let mut gens: Vec<Monomial> = set.into_iter().collect();
        gens.sort_by(canonical_cmp);
        MonomialIdeal {
            ctx: self.ctx.clone(),
            gens,
        }
    }

    /// Minimal generators of `m I`.
    pub fn times_maxideal(&self) -> MonomialIdeal {
        let n = self.ctx.n();
        let mons = self
            .gens
            .iter()
            .flat_map(|g| (0..n).map(move |i| g.mul_var(i)))
            .collect();
        MonomialIdeal::new(self.ctx.clone(), mons)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut mons = self.gens.clone();
        mons.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ctx.clone(), mons)
    }

    /// Whether all generators share one degree.
    pub fn is_equigenerated(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// `alpha_i = m_{n-i+1}(I)` for stable `I`.
    pub fn alpha_from_stable(&self) -> Result<AnnihilatorProfile> {
        alpha_from_stable(self)
    }

    pub fn fmt_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ctx.fmt_monomial(g)).collect()
    }
}

/// `alpha_i(S/I) = m_{n-i+1}(I)`, `i = 1..=n`, for stable `I`.
pub fn alpha_from_stable(ideal: &MonomialIdeal) -> Result<AnnihilatorProfile> {
    if !ideal.is_stable() {
        return Err(Error::NotStable);
    }
    let n = ideal.ctx().n();
    let st = ideal.stats();
    let alpha = (1..=n).map(|i| st.m(n - i + 1)).collect();
    Ok(AnnihilatorProfile {
        alpha,
        window: ideal.max_degree().unwrap_or(0),
        certified: true,
    })
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.fmt_gens().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
