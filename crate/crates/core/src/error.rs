use num_bigint::BigInt;

use crate::Rational;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("n = {n} is outside the supported range {min}..={max}")]
    OutOfRange { n: u64, min: u64, max: u64 },

    #[error("invalid score distribution: {0}")]
    InvalidDistribution(String),

    #[error("series division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("inverse square root needs constant term 1, found {0}")]
    ConstantTermNotOne(Rational),

    /// The cleared-denominator recurrence produced a value not divisible by
    /// its index. The sequence is integral, so this is always a bug.
    #[error("inexact division at index {index}: {numerator} is not a multiple of {index}")]
    InexactDivision { index: u64, numerator: BigInt },

    #[error("invalid lattice spec: {0}")]
    InvalidLattice(String),

    #[error("invalid diagonal decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid contour configuration: {0}")]
    InvalidContour(String),

    #[error("contour quadrature at n = {n} left an imaginary residual of {residual:e} (tolerance {tolerance:e})")]
    ImaginaryResidual { n: u64, residual: f64, tolerance: f64 },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
