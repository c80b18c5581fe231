//! Exact scalars and dense exact linear algebra.

mod field;
mod matrix;
mod rational;

pub use field::{FieldKind, FieldSpec, Scalar};
pub use matrix::{kernel_basis, rank, solve_membership, ColumnSpace, DenseMatrix};
pub use rational::{big_binomial, Rational};
