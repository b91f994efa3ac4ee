use thiserror::Error;

/// Errors produced while reading polynomial text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier `{name}` at position {position}")]
    UnknownIdentifier { name: String, position: usize },
    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },
    #[error("fractional exponent at position {position}")]
    FractionalExponent { position: usize },
    #[error("exponent at position {position} is not a constant")]
    NonConstantExponent { position: usize },
    #[error("exponent at position {position} is too large")]
    ExponentTooLarge { position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::UnknownIdentifier { position, .. }
            | ParseError::NegativeExponent { position }
            | ParseError::FractionalExponent { position }
            | ParseError::NonConstantExponent { position }
            | ParseError::ExponentTooLarge { position } => *position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("polynomial has degree 0; nothing to solve")]
    ConstantPolynomial,
    #[error("root finder did not converge after {iterations} iterations (max residual {max_residual:e})")]
    NoConvergence {
        iterations: usize,
        residuals: Vec<f64>,
        max_residual: f64,
    },
    #[error("ambiguous root clustering: clusters at distance {distance:e} within {threshold:e}")]
    AmbiguousClusters { distance: f64, threshold: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExpansionError {
    #[error("polynomial does not vanish at the origin (|g(0,0)| = {residual:e})")]
    NotThroughOrigin { residual: f64 },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("Newton polygon recursion exceeded {max_depth} iterations")]
    DepthExceeded { max_depth: usize },
    #[error("characteristic polynomial: {0}")]
    Root(#[from] RootError),
}

/// Top-level error type for the curve pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("expansion failed: {0}")]
    Expansion(#[from] ExpansionError),
    #[error("insufficient truncation: watermark {watermark} must be <= 0")]
    InsufficientTruncation { watermark: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("ambiguous infinity-point matching near m = {0}")]
    AmbiguousPoints(String),
    #[error("empty sample set for curve {0}")]
    EmptySample(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
