use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::ring::{Monomial, TermOrder};

/// Degree-`d` monomials outside `J`, descending in `order`.
pub fn std_monomials_in(j: &MonomialIdeal, d: u32, order: TermOrder) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Monomial::all_of_degree(j.ctx().n(), d)
        .into_iter()
        .filter(|m| !j.contains(m))
        .collect();
    if order != TermOrder::Lex {
        out.sort_by(|a, b| order.compare(b, a));
    }
    out
}

/// Degree-`d` standard monomials of `J` in descending degrevlex order.
pub fn std_monomials(j: &MonomialIdeal, d: u32) -> Vec<Monomial> {
    std_monomials_in(j, d, TermOrder::DegRevLex)
}

/// `dim_K (S/J)_d` for `d = 0..=d_max`.
pub fn hilbert_function(j: &MonomialIdeal, d_max: u32) -> Vec<u64> {
    let n = j.ctx().n();
    (0..=d_max)
        .map(|d| {
            Monomial::all_of_degree(n, d)
                .iter()
                .filter(|m| !j.contains(m))
                .count() as u64
        })
        .collect()
}

/// A polynomial in `d` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        HilbertPolynomial { coeffs: Vec::new() }
    }

    fn trimmed(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, d: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(d));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Lagrange interpolation through `(x_k, y_k)`.
    pub fn interpolate(points: &[(i64, u64)]) -> Self {
        let mut acc = vec![BigRational::zero(); points.len()];
        for (k, &(xk, yk)) in points.iter().enumerate() {
            // basis polynomial prod_{l != k} (d - x_l) / (x_k - x_l)
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (l, &(xl, _)) in points.iter().enumerate() {
                if l == k {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                let shift = BigRational::from_integer(BigInt::from(-xl));
                for (e, c) in basis.iter().enumerate() {
                    next[e + 1] += c;
                    next[e] += c * &shift;
                }
                basis = next;
                denom *= BigRational::from_integer(BigInt::from(xk - xl));
            }
            let scale = BigRational::from_integer(BigInt::from(yk)) / denom;
            for (e, c) in basis.iter().enumerate() {
                acc[e] += c * &scale;
            }
        }
        Self::trimmed(acc)
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "d".to_string(),
                _ => format!("d^{e}"),
            };
            if e == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

/// A degree beyond which the Hilbert function of `S/J` is polynomial:
/// the largest generator degree for stable `J`, otherwise the degree of the
/// lcm of all generators.
pub fn regularity_bound(j: &MonomialIdeal) -> u32 {
    if j.is_zero() {
        return 0;
    }
    if j.is_stable() {
        return j.max_degree().unwrap_or(0);
    }
    let mut l = j.ctx().one();
    for g in j.gens() {
        l = l.lcm(g);
    }
    l.degree()
}

/// Hilbert polynomial of `S/J`, interpolated on `reg+1..=reg+n` and checked
/// at `reg+n+1`.
pub fn hilbert_polynomial_from(j: &MonomialIdeal, reg: u32) -> Result<HilbertPolynomial> {
    let n = j.ctx().n() as u32;
    let hf = hilbert_function(j, reg + n + 1);
    let points: Vec<(i64, u64)> = (reg + 1..=reg + n)
        .map(|d| (d as i64, hf[d as usize]))
        .collect();
    let hp = HilbertPolynomial::interpolate(&points);
    let check = reg + n + 1;
    if hp.eval(check as i64) != BigRational::from_integer(BigInt::from(hf[check as usize])) {
        return Err(Error::Internal(format!(
            "Hilbert polynomial interpolation failed its check at degree {check}"
        )));
    }
    Ok(hp)
}

pub fn hilbert_polynomial(j: &MonomialIdeal) -> Result<HilbertPolynomial> {
    hilbert_polynomial_from(j, regularity_bound(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::ring::{monomial_count, RingCtx};

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    fn second_example(c: &RingCtx) -> MonomialIdeal {
        MonomialIdeal::parse(c, &["x1^2", "x1*x2", "x2^2", "x1*x3^2", "x1*x3*x4"]).unwrap()
    }

    #[test]
    fn std_monomial_examples() {
        let c = ctx(3);
        let m2 = MonomialIdeal::maximal_power(&c, 2);
        assert_eq!(std_monomials(&m2, 1).len(), 3);
        assert!(std_monomials(&m2, 2).is_empty());
        let c4 = ctx(4);
        assert_eq!(std_monomials(&second_example(&c4), 3).len(), 8);
    }

    #[test]
    fn hilbert_function_examples() {
        let c = ctx(3);
        assert_eq!(
            hilbert_function(&MonomialIdeal::maximal_power(&c, 2), 4),
            vec![1, 3, 0, 0, 0]
        );
        let z = MonomialIdeal::zero(&c);
        let hf = hilbert_function(&z, 6);
        for d in 0..=6 {
            assert_eq!(hf[d as usize], monomial_count(3, d));
        }
        let c4 = ctx(4);
        let hf = hilbert_function(&second_example(&c4), 8);
        assert_eq!(&hf[..6], &[1, 4, 7, 8, 10, 12]);
        for d in 3..=8u64 {
            assert_eq!(hf[d as usize], 2 * d + 2);
        }
    }

    #[test]
    fn hilbert_polynomial_examples() {
        let c = ctx(3);
        assert!(hilbert_polynomial(&MonomialIdeal::maximal_power(&c, 3))
            .unwrap()
            .is_zero());
        let c2 = ctx(2);
        let x1 = MonomialIdeal::parse(&c2, &["x1"]).unwrap();
        assert_eq!(hilbert_polynomial(&x1).unwrap().to_string(), "1");
        let c4 = ctx(4);
        let hp = hilbert_polynomial(&second_example(&c4)).unwrap();
        assert_eq!(hp.to_string(), "2*d + 2");
        let hp = hilbert_polynomial(&MonomialIdeal::zero(&c)).unwrap();
        assert_eq!(hp.to_string(), "1/2*d^2 + 3/2*d + 1");
        // not stable: (x1^2, x2^2) in 3 variables has HP 4
        let ci = MonomialIdeal::parse(&c, &["x1^2", "x2^2"]).unwrap();
        assert_eq!(hilbert_polynomial(&ci).unwrap().to_string(), "4");
    }
}
