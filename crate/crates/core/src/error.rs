use thiserror::Error;

/// Errors produced by word construction, generation, analysis and indexing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 0..={max}")]
    Range { index: usize, max: usize },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("refusing to materialize {requested} symbols (cap is {cap})")]
    Resource { requested: usize, cap: usize },

    #[error("no bound: {0}")]
    NoBound(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
