//! Error type shared by every module in this crate.

use thiserror::Error;

/// Everything that can go wrong when building inputs or evaluating the measure.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MimError {
    /// A probability vector entry was zero, negative, or not finite.
    #[error("entry {index} must be strictly positive and finite (got {value})")]
    NonPositiveEntry { index: usize, value: f64 },

    /// Probabilities do not sum to one within the accepted tolerance.
    #[error("probabilities sum to {sum}, outside 1 ± {tolerance}")]
    NotNormalized { sum: f64, tolerance: f64 },

    /// A distribution (or hypothesis ensemble) needs at least two entries.
    #[error("need at least two events, got {0}")]
    TooFewEvents(usize),

    /// An event index does not address a valid (pair of) entries.
    #[error("index {index} is not a valid event index for {len} events")]
    IndexOutOfRange { index: usize, len: usize },

    /// A scalar parameter fell outside its admissible range.
    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    /// No entry lies below 1/n, so the threshold machinery has nothing to work with.
    #[error("distribution is uniform (or within 1e-12 of it); no entry lies below 1/n")]
    DegenerateDistribution,

    /// The measure never overtakes the uniform baseline on the searched interval.
    #[error("no crossing with the uniform baseline found in (0, {search_max}]")]
    NoCrossing { search_max: f64 },

    /// Prior bounds coincide, so the balancing equation degenerates.
    #[error("prior bounds coincide; the balancing equation is degenerate")]
    DegenerateInterval,

    /// The Gaussian closed form requires both hypotheses to share one sigma.
    #[error("hypotheses must share a sigma for the closed form (got {sigma0} and {sigma1})")]
    ModelMismatch { sigma0: f64, sigma1: f64 },
}

pub type Result<T> = std::result::Result<T, MimError>;
