use thiserror::Error;

/// Errors raised by geometric constructions and checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Point set does not affinely span the ambient space.
    #[error("degenerate input: affine rank {rank} in dimension {dim}")]
    Degenerate { rank: usize, dim: usize },

    /// Halfspace intersection has empty interior but is not empty.
    #[error("halfspace intersection is lower-dimensional")]
    LowerDimensional,

    #[error("halfspace intersection is empty")]
    EmptyBody,

    #[error("halfspace intersection is unbounded")]
    UnboundedBody,

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("generator failed: {0}")]
    Generator(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(GeomError::DimensionMismatch { expected, found })
    }
}
