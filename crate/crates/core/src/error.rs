//! Error type shared across the kernel.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values from incompatible rings (or with different variable
    /// counts) were combined.
    #[error("spec mismatch: {0}")]
    SpecMismatch(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable x{var} out of range: the polynomial ring has {nvars} variable(s)")]
    VariableOutOfRange { var: usize, nvars: usize },

    #[error("range error: {0}")]
    Range(String),

    #[error("matrix size {size} exceeds the limit {max} for this operation")]
    SizeTooLarge { size: usize, max: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
