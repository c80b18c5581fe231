use super::{Polynomial, RingCtx};
use crate::error::{Error, Result};
use crate::exactla::{rank, solve_membership, DenseMatrix, Scalar};

/// An invertible linear substitution: `x_i` goes to the linear form in row `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    matrix: DenseMatrix,
}

impl LinearChange {
    pub fn new(matrix: DenseMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::Precondition(format!(
                "coordinate change must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if rank(&matrix) != matrix.rows() {
            return Err(Error::NotInvertible);
        }
        Ok(LinearChange { matrix })
    }

    pub fn identity(ctx: &RingCtx) -> Self {
        LinearChange {
            matrix: DenseMatrix::identity(ctx.field(), ctx.n()),
        }
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> LinearChange {
        let n = self.matrix.rows();
        let field = self.matrix.field();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                let e: Vec<Scalar> = (0..n)
                    .map(|i| if i == j { field.one() } else { field.zero() })
                    .collect();
                solve_membership(&self.matrix, &e).expect("invertible matrix")
            })
            .collect();
        LinearChange {
            matrix: DenseMatrix::from_columns(field, n, &cols),
        }
    }

    /// Image of `x_{i+1}`.
    pub fn image_of_var(&self, ctx: &RingCtx, order: super::TermOrder, i: usize) -> Polynomial {
        Polynomial::linear_form(ctx, order, self.matrix.row(i))
    }

    /// Substitutes every variable by its image and re-canonicalizes.
    pub fn apply(&self, ctx: &RingCtx, f: &Polynomial) -> Polynomial {
        let order = f.order();
        let n = ctx.n();
        let images: Vec<Polynomial> = (0..n).map(|i| self.image_of_var(ctx, order, i)).collect();
        // powers[i][e] = images[i]^e, built lazily
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|_| vec![Polynomial::constant(ctx, order, ctx.field().one())])
            .collect();
        let mut acc = Polynomial::zero(order);
        for (m, c) in f.terms() {
            let mut t = Polynomial::constant(ctx, order, c.clone());
            for i in 0..n {
                let e = m.exponent(i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// `apply_change(f, g)`.
pub fn apply_change(ctx: &RingCtx, f: &Polynomial, g: &LinearChange) -> Polynomial {
    g.apply(ctx, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::ring::TermOrder;

    fn ctx(n: usize) -> RingCtx {
        RingCtx::new(n, FieldSpec::rationals()).unwrap()
    }

    fn p(c: &RingCtx, s: &str) -> Polynomial {
        c.parse(TermOrder::DegRevLex, s).unwrap()
    }

    #[test]
    fn identity_swap_and_shear() {
        let c = ctx(2);
        let q = c.field();
        let f = p(&c, "x1^2 - 3*x1*x2");
        assert_eq!(LinearChange::identity(&c).apply(&c, &f), f);

        let swap = LinearChange::new(DenseMatrix::from_i64_rows(q, &[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(swap.apply(&c, &p(&c, "x1^2")), p(&c, "x2^2"));

        let shear = LinearChange::new(DenseMatrix::from_i64_rows(q, &[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(shear.apply(&c, &p(&c, "x1*x2")), p(&c, "x1*x2 + x2^2"));
    }

    #[test]
    fn singular_change_rejected() {
        let q = FieldSpec::rationals();
        let m = DenseMatrix::from_i64_rows(q, &[&[1, 2], &[2, 4]]);
        assert!(matches!(LinearChange::new(m), Err(Error::NotInvertible)));
    }

    #[test]
    fn inverse_round_trip() {
        let c = ctx(3);
        let q = c.field();
        let g = LinearChange::new(DenseMatrix::from_i64_rows(
            q,
            &[&[2, -1, 0], &[1, 3, 5], &[0, 7, -2]],
        ))
        .unwrap();
        let f = p(&c, "x1^3 - 1/2*x2*x3^2 + 4*x1*x2*x3");
        let back = g.inverse().apply(&c, &g.apply(&c, &f));
        assert_eq!(back, f);
        assert!(g.apply(&c, &f).is_homogeneous());
    }
}
