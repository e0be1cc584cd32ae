use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate edge {u} -- {v}")]
    DuplicateEdge { line: usize, u: String, v: String },

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("edge probability {value} lies outside the open interval (0, 1)")]
    ProbabilityOutOfRange { value: f64 },

    #[error("refusing to enumerate 2^{degree} possible worlds (limit is degree {limit})")]
    EnumerationTooLarge { degree: usize, limit: usize },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("epidemic threshold undefined: <k^2> = {k2_mean} must exceed <k> = {k_mean}")]
    DegenerateThreshold { k_mean: f64, k2_mean: f64 },

    #[error("ranking does not cover the graph: {0}")]
    RankingMismatch(String),

    #[error("sequence length mismatch: {left} != {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("at least two observations are required, got {0}")]
    InsufficientLength(usize),

    #[error("correlation undefined: every value in {0} is tied")]
    UndefinedCorrelation(&'static str),

    #[error("NaN is not a valid score")]
    NanScore,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
