use thiserror::Error;

/// Errors raised by the algebraic and geometric routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is singular")]
    Singular,

    #[error("the zero vector is not allowed here")]
    ZeroVector,

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,

    #[error("Lie algebra is not filiform")]
    NotFiliform,

    #[error("Gram matrix is not symmetric positive definite: {0}")]
    NotPositiveDefinite(String),

    #[error("vector does not lie in the required subspace ({0})")]
    NotInSubspace(&'static str),

    #[error("structure coefficient c_{index} must be nonzero")]
    ZeroCoefficient { index: usize },

    #[error("no inner product makes this vector a geodesic: it lies in the image of its own adjoint map")]
    NoGeodesicMetric,

    #[error("Killing form is not negative definite")]
    NotCompactType,

    /// A property that the mathematics guarantees did not hold. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
