//! Monomials, term orders, sparse polynomials, coordinate changes and the
//! textual polynomial grammar.

mod change;
mod monomial;
mod order;
mod parse;
mod polynomial;

use std::sync::Arc;

pub use change::{apply_change, LinearChange};
pub use monomial::{binomial, monomial_count, Monomial};
pub use order::TermOrder;
pub use parse::{parse_poly, ParseError, ParseErrorKind};
pub use polynomial::Polynomial;

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;

/// `S = K[x1, ..., xn]` together with resource guards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCtx {
    n: usize,
    field: FieldSpec,
    names: Arc<[String]>,
    max_degree: u32,
    degree_guard: u32,
}

impl RingCtx {
    pub const DEFAULT_MAX_DEGREE: u32 = 64;
    pub const DEFAULT_DEGREE_GUARD: u32 = 40;

    pub fn new(n: usize, field: FieldSpec) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition(
                "a ring needs at least one variable".into(),
            ));
        }
        if n > u16::MAX as usize {
            return Err(Error::Precondition(format!("{n} variables is too many")));
        }
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Ok(RingCtx {
            n,
            field,
            names: names.into(),
            max_degree: Self::DEFAULT_MAX_DEGREE,
            degree_guard: Self::DEFAULT_DEGREE_GUARD,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::Precondition(format!(
                "expected {} variable names, got {}",
                self.n,
                names.len()
            )));
        }
        for (k, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let ok = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::Precondition(format!(
                    "invalid variable name {name:?}"
                )));
            }
            if names[..k].contains(name) {
                return Err(Error::Precondition(format!(
                    "duplicate variable name {name:?}"
                )));
            }
        }
        self.names = names.into();
        Ok(self)
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = field;
        self
    }

    pub fn with_max_degree(mut self, d: u32) -> Self {
        self.max_degree = d.min(u16::MAX as u32);
        self
    }

    pub fn with_degree_guard(mut self, d: u32) -> Self {
        self.degree_guard = d;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// Largest total degree accepted from the parser.
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Largest degree a Gröbner basis computation may reach.
    pub fn degree_guard(&self) -> u32 {
        self.degree_guard
    }

    /// Same variables and field; guards may differ.
    pub fn compatible(&self, other: &RingCtx) -> bool {
        self.n == other.n && self.field == other.field
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.n)
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::var(self.n, i)
    }

    pub fn parse(&self, order: TermOrder, text: &str) -> Result<Polynomial> {
        parse_poly(self, order, text).map_err(Error::from)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        m.fmt_with(&self.names)
    }
}
