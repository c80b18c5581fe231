use std::cmp::Ordering;
use std::fmt::Write as _;

use super::{Monomial, RingCtx, TermOrder};
use crate::exactla::Scalar;

/// A sparse polynomial: terms sorted strictly descending in `order`,
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    order: TermOrder,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(order: TermOrder) -> Self {
        Polynomial {
            order,
            terms: Vec::new(),
        }
    }

    /// Canonicalizes an arbitrary term list.
    pub fn from_terms(order: TermOrder, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { order, terms: out }
    }

    /// Trusts `terms` to be strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(order: TermOrder, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { order, terms }
    }

    pub fn term(order: TermOrder, mono: Monomial, coeff: Scalar) -> Self {
        if coeff.is_zero() {
            return Self::zero(order);
        }
        Polynomial {
            order,
            terms: vec![(mono, coeff)],
        }
    }

    pub fn monomial(ctx: &RingCtx, order: TermOrder, mono: Monomial) -> Self {
        Self::term(order, mono, ctx.field().one())
    }

    pub fn var(ctx: &RingCtx, order: TermOrder, i: usize) -> Self {
        Self::monomial(ctx, order, Monomial::var(ctx.n(), i))
    }

    pub fn constant(ctx: &RingCtx, order: TermOrder, c: Scalar) -> Self {
        Self::term(order, Monomial::one(ctx.n()), c)
    }

    /// The linear form `sum coeffs[i] * x_{i+1}`.
    pub fn linear_form(ctx: &RingCtx, order: TermOrder, coeffs: &[Scalar]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(ctx.n(), i), c.clone()))
            .collect();
        Self::from_terms(order, terms)
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms
            .binary_search_by(|(t, _)| self.order.compare(m, t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn with_order(&self, order: TermOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { order, terms }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Self::zero(self.order);
        }
        Polynomial {
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, None, None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let minus_one = match self.terms.first().or(other.terms.first()) {
            Some((_, c)) => -c.one_like(),
            None => return self.clone(),
        };
        self.combine(other, Some(&minus_one), None)
    }

    /// `self - coeff * mono * other` in one merge pass.
    pub fn sub_multiple(&self, coeff: &Scalar, mono: &Monomial, other: &Polynomial) -> Polynomial {
        let neg = -coeff;
        self.combine(other, Some(&neg), Some(mono))
    }

    /// `self + factor * shift * other`, merged in order.
    fn combine(
        &self,
        other: &Polynomial,
        factor: Option<&Scalar>,
        shift: Option<&Monomial>,
    ) -> Polynomial {
        debug_assert_eq!(self.order, other.order);
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(m, c)| {
                let m = match shift {
                    Some(s) => m.mul(s),
                    None => m.clone(),
                };
                let c = match factor {
                    Some(f) => c * f,
                    None => c.clone(),
                };
                (m, c)
            })
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ma, _)), Some((mb, _))) => order.compare(ma, mb),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let t = b.next().unwrap();
                    if !t.1.is_zero() {
                        out.push(t);
                    }
                }
                Ordering::Equal => {
                    let (m, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca + &cb;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            }
        }
        Polynomial { order, terms: out }
    }

    pub fn mul_term(&self, mono: &Monomial, coeff: &Scalar) -> Polynomial {
        if coeff.is_zero() {
            return Self::zero(self.order);
        }
        // multiplication by a monomial preserves the order of terms
        Polynomial {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c * coeff))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(self.order);
        for (m, c) in &small.terms {
            acc = acc.combine(large, Some(c), Some(m));
        }
        acc
    }

    pub fn pow(&self, ctx: &RingCtx, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(ctx, self.order, ctx.field().one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Renders in the textual grammar accepted by the parser.
    pub fn to_string_with(&self, ctx: &RingCtx) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                let _ = write!(s, "{abs}");
            } else if abs.is_one() {
                s.push_str(&m.fmt_with(ctx.names()));
            } else {
                let _ = write!(s, "{abs}*{}", m.fmt_with(ctx.names()));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn canonical_form_merges_and_drops_zeros() {
        let c = ctx(2);
        let q = c.field();
        let p = Polynomial::from_terms(
            TermOrder::DegRevLex,
            vec![
                (Monomial::from_exponents(&[0, 1]), q.from_i64(2)),
                (Monomial::from_exponents(&[1, 0]), q.from_i64(1)),
                (Monomial::from_exponents(&[0, 1]), q.from_i64(-2)),
            ],
        );
        assert_eq!(p.len(), 1);
        assert_eq!(p.to_string_with(&c), "x1");
    }

    #[test]
    fn binomial_square() {
        let c = ctx(2);
        let o = TermOrder::DegRevLex;
        let s = Polynomial::var(&c, o, 0).add(&Polynomial::var(&c, o, 1));
        assert_eq!(s.pow(&c, 2).to_string_with(&c), "x1^2 + 2*x1*x2 + x2^2");
        assert!(s.pow(&c, 3).is_homogeneous());
        let d = Polynomial::var(&c, o, 0).sub(&Polynomial::var(&c, o, 0));
        assert!(d.is_zero());
    }

    #[test]
    fn sub_multiple_matches_naive() {
        let c = ctx(3);
        let o = TermOrder::DegRevLex;
        let q = c.field();
        let f = Polynomial::var(&c, o, 0)
            .pow(&c, 2)
            .add(&Polynomial::var(&c, o, 2).pow(&c, 2));
        let g = Polynomial::var(&c, o, 1).add(&Polynomial::var(&c, o, 2));
        let m = Monomial::var(3, 0);
        let k = q.from_i64(3);
        let naive = f.sub(&g.mul_term(&m, &k));
        assert_eq!(f.sub_multiple(&k, &m, &g), naive);
    }
}
