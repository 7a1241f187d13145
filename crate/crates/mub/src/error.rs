use thiserror::Error;

/// Errors reported by constructions and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension {0} must be odd")]
    OddRequired(usize),

    #[error("dimension {0} must be even")]
    EvenRequired(usize),

    #[error("left factor must be diagonal")]
    NotDiagonal,

    #[error("matrix is not a permutation matrix")]
    NotPermutation,

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),

    #[error(
        "invalid clique for dimension {dim}: residues {a} and {b} \
         share the factor {divisor} with {dim}"
    )]
    InvalidClique {
        dim: usize,
        a: usize,
        b: usize,
        divisor: usize,
    },

    #[error("eigenvalue relation unsupported for even dimension {dim} with k = {k}")]
    UnsupportedRelation { dim: usize, k: usize },

    #[error("method `{method}` does not apply to dimension {dim}")]
    MethodMismatch { method: String, dim: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid matrix data: {0}")]
    InvalidData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
