//! Generic initial ideals, graded Betti numbers, Koszul homology and
//! lex-segment ideals over exact fields.
pub mod error;
pub mod exactla;
pub mod gin;
pub mod groebner;
pub mod koszul;
pub mod monideal;
pub mod ring;
pub mod verifier;

pub use error::{Error, Result};
