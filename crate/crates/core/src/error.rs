use thiserror::Error;

/// Errors produced by evaluators and checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("unsupported mode: {0}")]
    UnsupportedMode(String),
    #[error("series diverges: {0}")]
    Divergence(String),
    #[error("truncation cap of {cap} terms reached before convergence")]
    TruncationCap { cap: usize },
    #[error("relation {relation}: bracket image of x^{degree} is not in the span of the declared basis")]
    SpanFailure { relation: String, degree: i64 },
    #[error("casimir is not central: image of x^{degree} is not a scalar multiple of it")]
    NotCentral { degree: i64 },
    #[error("quadrature did not converge: refinement delta {delta:e} above tolerance {tolerance:e}")]
    Accuracy { delta: f64, tolerance: f64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("limit case {case}: {source}")]
    Limit {
        case: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
