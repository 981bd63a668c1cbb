use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must live over the same (r, n) do not.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A value violates a type invariant (range, monotonicity, length).
    #[error("invalid input: {0}")]
    Domain(String),

    /// A grid does not have the required rectangular shape.
    #[error("shape error: {0}")]
    Shape(String),

    /// An enumeration or search exceeded the configured bound.
    #[error("search limit exceeded: {0}")]
    ResourceLimit(String),

    /// Exact division had a nonzero remainder.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    /// A factorization certificate failed to validate. The underlying
    /// identities are theorems, so this always signals an implementation bug.
    #[error("certificate check failed: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
