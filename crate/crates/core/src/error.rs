use thiserror::Error;

use crate::shapes::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function is not a polynomial")]
    NotPolynomial,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cell ({row}, {col}) lies outside the shape {shape}")]
    CellOutsideShape {
        row: usize,
        col: usize,
        shape: Partition,
    },
    #[error("label {label} out of range for a tableau with {size} cells")]
    LabelOutOfRange { label: usize, size: usize },
    #[error("{nu} is not obtained from {mu} by removing one corner")]
    NotACover { mu: Partition, nu: Partition },
    #[error("{nu} is not contained in {mu} with a skew of {k} cells")]
    NotContained {
        mu: Partition,
        nu: Partition,
        k: usize,
    },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("eigenvalues of D0 coincide in degree {0}")]
    DegenerateSpectrum(usize),
    #[error("({0}, {1}) is not a co-prime pair")]
    NotCoprime(i64, i64),
    #[error("Q({0}, {1}) lies outside the supported index regions")]
    UnsupportedRegion(i64, i64),
    #[error("tableau term has a vanishing denominator: {0}")]
    SingularSubstitution(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
