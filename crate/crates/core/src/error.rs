use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A point or subinterval lies outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An argument is out of its admissible range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Input data violates a mathematical precondition (sign, equal means, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Neumann data must integrate to zero.
    #[error("incompatible Neumann data: the source must satisfy ∫f = 0, got ∫f = {integral}")]
    Compatibility { integral: f64 },

    #[error("internal error: {0}")]
    Internal(String),
}
