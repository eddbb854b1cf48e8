use thiserror::Error;

use crate::divergences::MeasureId;

/// Error type shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("expected a positive finite argument, got {value}")]
    NonPositiveInput { value: f64 },

    #[error("NaN is not a valid argument")]
    NanInput,

    #[error("parameter `{name}` out of range: {value}")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("distributions have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("a distribution needs at least 2 bins, got {len}")]
    TooFewBins { len: usize },

    #[error("weight {value} at index {index} is not strictly positive")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("weights sum to {sum}, expected 1 within 1e-9")]
    NotNormalized { sum: f64 },

    #[error("measure {measure} has no generator in the catalog")]
    NoGenerator { measure: MeasureId },

    #[error("non-finite value in {context} at x = {x}")]
    NonFinite { context: &'static str, x: f64 },

    #[error("vanishing curvature denominator at x = {x}")]
    Singularity { x: f64 },

    #[error("invalid chain definition: {0}")]
    ChainConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
