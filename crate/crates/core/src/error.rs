use thiserror::Error;

use crate::ring::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid field: {0}")]
    Field(String),

    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("degree guard exceeded: reached degree {degree}, guard is {guard}")]
    DegreeGuard { degree: u32, guard: u32 },

    #[error("linear change of coordinates is not invertible")]
    NotInvertible,

    #[error("monomial ideal is not stable")]
    NotStable,

    #[error("requested dim I_{degree} = {requested} but dim S_{degree} = {available}")]
    ImpossibleDimension {
        degree: u32,
        requested: u64,
        available: u64,
    },

    #[error("not an O-sequence: the maximal ideal times L_{degree} leaves the next lex segment")]
    NotOSequence { degree: u32 },

    #[error("degree window too short: {0}")]
    WindowTooShort(String),

    #[error("generic initial ideal trials disagree (seed {seed}, {trials} trials); re-seed or raise the entry bound")]
    GinDisagreement { seed: u64, trials: usize },

    #[error("genericity failure: {0}")]
    Genericity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Errors raised by a resource guard rather than by bad input or a bug.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::DegreeGuard { .. } | Error::WindowTooShort(_))
    }
}
