use alloc::string::String;
use thiserror::Error;

/// Errors produced by simulator operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A malformed argument: bad register, missing label, wrong shape.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The requested measurement branch has probability below 1e-14; the
    /// caller decides whether to skip it.
    #[error("zero-probability measurement branch")]
    ZeroProbabilityBranch,
    /// A numerical guard tripped: non-Hermitian residue, an eigenvalue below
    /// the tolerated window, or similar.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    /// The request exceeds a hard capability bound.
    #[error("capability exceeded: {0}")]
    CapabilityExceeded(String),
}
