use thiserror::Error;

use crate::charpair::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("every pairwise determinant is zero")]
    AllDependent,

    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("{0} is not a prime")]
    NotPrime(i64),

    #[error("matrix {0:?} is not unimodular")]
    NotUnimodular([[i64; 2]; 2]),

    #[error("sign vector has length {got}, expected {expected}")]
    SignLength { expected: usize, got: usize },

    #[error("sign entries must be +1 or -1, got {0}")]
    BadSign(i64),

    #[error("characteristic pair is not admissible: {0}")]
    Invalid(ValidationReport),

    #[error("expected a triangle, got {0} edges")]
    NotATriangle(usize),

    #[error("edge index {index} out of range 1..={max}")]
    EdgeOutOfRange { index: usize, max: usize },

    #[error("vertex v_m is not 2-local smooth; relabel before contracting")]
    NotNormalized,

    #[error("degenerate triple has d23 = 0")]
    DegenerateTriple,

    #[error("forms have different ranks ({0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("census needs m >= 3 and bound >= 1, got m = {m}, bound = {bound}")]
    CensusSize { m: usize, bound: i64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
