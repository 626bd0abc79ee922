//! Crate-wide error type.
//!
//! Every fallible operation in the library returns `Result<T, Error>`. Checks
//! whose *outcome* is the interesting part (validators, condition suites)
//! return a [`crate::report::CheckReport`] instead; `Error` is reserved for
//! contract violations: dimension mismatches, singular inputs, malformed
//! specifications, and internal cross-check failures that indicate a bug.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("linear system has no solution: {0}")]
    NoSolution(String),

    #[error("not a direct sum: {0}")]
    NotDirectSum(String),

    #[error("bilinear form is invalid: {0}")]
    BadForm(String),

    #[error("structure constants are invalid: {0}")]
    BadStructure(String),

    #[error("matrix representation is invalid: {0}")]
    BadRep(String),

    #[error("group point is invalid: {0}")]
    BadPoint(String),

    #[error("element is not nilpotent in the representation: {0}")]
    NotNilpotent(String),

    #[error("Manin triple is invalid: {0}")]
    BadTriple(String),

    #[error("section specification is invalid: {0}")]
    BadSection(String),

    #[error("bundle fiber condition failed: {0}")]
    FiberCondition(String),

    #[error("internal cross-check failed (this is a bug): {0}")]
    CrossCheck(String),

    #[error("rational parse error at {pointer}: {message}")]
    RatParse { pointer: String, message: String },

    #[error("input spec error at {pointer}: {message}")]
    Spec { pointer: String, message: String },

    #[error("JSON error: {0}")]
    Json(String),

    #[error("unsupported request: {0}")]
    Unsupported(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
