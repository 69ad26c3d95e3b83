//! Error types for metric, statistics, and generator operations.

use thiserror::Error;

use crate::sample::Label;

/// Errors produced by metric, statistics, and generator operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricsError {
    /// A score, threshold, or other numeric input was NaN, infinite, or
    /// otherwise outside its admissible range.
    #[error("{what} must be finite and admissible, got {value}")]
    InvalidInput { what: &'static str, value: f64 },

    /// Two samples in one evaluation set share a clip id.
    #[error("duplicate clip id in evaluation set: {0}")]
    DuplicateClipId(String),

    /// The operation received an evaluation set with no samples.
    #[error("evaluation set is empty")]
    EmptySet,

    /// The operation needs at least one sample of each class.
    #[error("evaluation set has no {missing} samples")]
    SingleClass { missing: Label },

    /// All anomaly scores are equal, so the threshold range has zero width
    /// and the expected-value normalization is undefined.
    #[error("all anomaly scores are equal; threshold range has zero width")]
    DegenerateScores,

    /// Computing bounds needs at least two normal samples for the sample
    /// standard deviation.
    #[error("need at least 2 normal samples to estimate bounds, found {found}")]
    InsufficientNormals { found: usize },

    /// A tuning parameter was outside its admissible range.
    #[error("parameter {name} out of range: {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    /// A statistic was requested on fewer values than它 needs.
    #[error("need at least {needed} values, found {found}")]
    InsufficientData { needed: usize, found: usize },

    /// Pearson correlation is undefined when either series is constant.
    #[error("correlation undefined: at least one series is constant")]
    UndefinedCorrelation,
}
