//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The variants double as the machine-readable error kinds emitted by the
/// command-line front end (see [`Error::kind`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("type mismatch: {0}")]
    Typing(String),
    #[error("representation is not adapted to the partition: {0}")]
    Adaptedness(String),
    #[error("refinement conflict: {0}")]
    RefinementConflict(String),
    #[error("interpolation failed: {0}")]
    Interpolation(String),
    #[error("count is not polynomial in q: {0}")]
    Polynomiality(String),
    #[error("malformed input: {0}")]
    Schema(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Precondition(_) => "precondition",
            Error::Resource(_) => "resource",
            Error::Typing(_) => "typing",
            Error::Adaptedness(_) => "adaptedness",
            Error::RefinementConflict(_) => "refinement-conflict",
            Error::Interpolation(_) => "interpolation",
            Error::Polynomiality(_) => "polynomiality",
            Error::Schema(_) => "schema",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
