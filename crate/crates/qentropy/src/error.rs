//! Error type shared across the crate.
//!
//! Variants are grouped by what went wrong: malformed input data
//! (empty/negative/zero-mass distributions, ragged tables), domain
//! violations of the deformed maps (cutoffs, generator domains), and
//! parameter validation failures.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input: a distribution needs at least one weight")]
    EmptyInput,

    #[error("negative weight {value} at position {index}")]
    NegativeWeight { index: usize, value: f64 },

    #[error("zero mass: weights sum to zero")]
    ZeroMass,

    #[error("ragged table: row {row} has {got} cells, expected {expected}")]
    RaggedRows {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("shape mismatch: {left} values against {right} weights")]
    LengthMismatch { left: usize, right: usize },

    #[error("index {index} out of bounds for axis of size {size}")]
    IndexOutOfBounds { index: usize, size: usize },

    #[error("cannot condition on a null event ({axis} = {index} has zero mass)")]
    ConditionOnNullEvent { axis: &'static str, index: usize },

    #[error("escort of order {q} is undefined on a distribution with zero entries")]
    EscortUndefined { q: f64 },

    #[error("deformed logarithm needs a positive argument, got {value}")]
    NonPositiveArgument { value: f64 },

    #[error("deformed exponential cutoff violated: 1 + (1-q)x = {factor} is not positive")]
    CutoffViolation { factor: f64 },

    #[error("argument {value} lies outside the generator domain ({domain})")]
    DomainViolation { value: f64, domain: &'static str },

    #[error("argument {value} lies outside the range of the deformation map")]
    OutOfRange { value: f64 },

    #[error("delta-additivity is only defined for nonnegative entropies, got {value}")]
    NegativeEntropyForDeltaRule { value: f64 },

    #[error("invalid parameters: {reason}")]
    InvalidParameters { reason: String },
}

impl Error {
    pub fn invalid_parameters(reason: impl Into<String>) -> Self {
        Error::InvalidParameters {
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
