use thiserror::Error;

/// Errors raised by norm construction and the geometric operations.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid norm: {0}")]
    InvalidNorm(String),

    #[error("zero vector passed where a direction is required")]
    ZeroVector,

    #[error("vectors are parallel or linearly dependent")]
    Parallel,

    #[error("degenerate triangle: vertices are collinear")]
    DegenerateTriangle,

    #[error("singular linear map (|det| <= 1e-12)")]
    SingularMap,

    #[error("norm is not Radon (antinorm/norm ratio spread {spread:.3e} exceeds {tol:.1e})")]
    NotRadon { spread: f64, tol: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a conjugate pair: {0}")]
    NotConjugate(String),

    #[error("numerical accuracy check failed: {0}")]
    Accuracy(String),

    #[error("line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
