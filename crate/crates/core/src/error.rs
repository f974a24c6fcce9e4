use thiserror::Error;

/// Errors raised by the engine.
///
/// Contract violations (bad shapes, out-of-range vertices) are reported here
/// rather than panicking, so the CLI can map them onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modules or maps live over different algebras")]
    AlgebraMismatch,
    #[error("path is not a basis path of the algebra")]
    NotInBasis,
    #[error("vertex {vertex} is outside 1..={count}")]
    BadVertex { vertex: usize, count: usize },
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("not a module map: {0}")]
    NotIntertwining(String),
    #[error("source mismatch: {0}")]
    SourceMismatch(String),
    #[error("isomorphism search undecided: {0}")]
    Undecided(String),
    #[error("falsified: {0}")]
    Falsified(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
