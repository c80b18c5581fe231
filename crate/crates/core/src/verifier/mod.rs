//! Randomized instance generation and per-statement checks that cross-validate
//! the independent routes to Betti numbers, annihilator numbers and gins.

mod checks;
mod random;
mod report;

pub use checks::{
    alpha_invariance_check, bound_check, ci_experiment, homology_identity_check, lex_comparison,
    lex_ideal_of, lowerbound_check, maximal_equivalences, propagation_check, rigidity_check,
    strange_check, Comparand,
};
pub use random::{random_ideal, random_monomial_ideal, IdealSpec, Shape, COEFF_BOUND};
pub use report::{CheckConfig, Fact, Instance, Status, TheoremReport, Verdict};
