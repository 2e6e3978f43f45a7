//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("series division requires an invertible constant term")]
    NonInvertibleConstantTerm,
    #[error("geometric factor is not positively ordered in the expansion variables: {0}")]
    IllOrderedGeometric(String),
    #[error("truncation bound too small for exact constant-term extraction: {0}")]
    InsufficientBound(String),
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("cell ({0},{1}) lies outside the diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("substitution makes a denominator vanish identically")]
    SubstitutionDenominatorVanishes,
    #[error("substitution requires a square root that does not exist: {0}")]
    NoSquareRoot(String),
    #[error("operator produced a residual denominator in the x variables (input not symmetric?)")]
    AsymmetricInput,
    #[error("truncation guard coefficient is nonzero: {0}")]
    GuardCoefficientNonzero(String),
    #[error("independently computed routes disagree: {0}")]
    MethodMismatch(String),
    #[error("malformed JSON input: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
