use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: inner {inner} is not contained in outer {outer}")]
    InvalidSkewShape { outer: String, inner: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: String, right: String },

    #[error("multiplicity of {key} is not an integer: {value}")]
    NonIntegralMultiplicity { key: String, value: String },

    #[error("multiplicity of {key} is negative: {value}")]
    NegativeMultiplicity { key: String, value: String },

    #[error("{what} needs size {size}, over the budget of {budget}")]
    SizeBudgetExceeded {
        what: String,
        size: usize,
        budget: usize,
    },

    #[error("action is not polynomial: found weight {0}")]
    NonPolynomialAction(String),

    #[error("torus generators are not simultaneously diagonalizable over the integers")]
    NonDiagonalizableTorus,

    #[error("invalid arguments: {0}")]
    InvalidArgs(String),

    #[error("independent computations disagree: {0}")]
    OracleDisagreement(String),

    #[error("parse error: {0}")]
    Parse(String),
}
