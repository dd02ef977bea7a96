use thiserror::Error;

/// Errors raised by the exact-arithmetic engine and the verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot compose extension elements over different discriminants ({left} vs {right})")]
    DiscMismatch { left: String, right: String },

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("irrational residue: beta = {0} did not cancel")]
    IrrationalResidue(String),

    #[error("degenerate characteristic roots: discriminant is zero (p = q)")]
    DegenerateRoots,

    #[error("sequence term at index {index} is zero")]
    ZeroDivisor { index: usize },

    #[error("singular coefficient at (r, s) = ({r}, {s}): {reason}")]
    SingularCoefficient { r: usize, s: usize, reason: String },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("excluded case: {0}")]
    ExcludedCase(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
