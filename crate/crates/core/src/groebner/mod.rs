//! Buchberger's algorithm, normal forms, initial ideals and Hilbert data.

mod buchberger;
mod hilbert;
mod ideal;

pub use buchberger::{buchberger, initial_ideal, normal_form, GroebnerBasis};
pub use hilbert::{
    hilbert_function, hilbert_polynomial, hilbert_polynomial_from, regularity_bound, std_monomials,
    std_monomials_in, HilbertPolynomial,
};
pub use ideal::GradedIdeal;
