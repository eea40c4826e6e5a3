use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty batch")]
    EmptyBatch,

    #[error("ragged rows: expected {expected} features, got {got}")]
    RaggedRows { expected: usize, got: usize },

    #[error("invalid target {0}: must be > 0")]
    InvalidTarget(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite feature value")]
    NonFinite,

    #[error("untrained model")]
    UntrainedModel,

    #[error("degenerate clustering")]
    DegenerateClustering,

    #[error("empty group")]
    EmptyGroup,

    #[error("io error: {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("encoding error: unknown token {token:?} in column {column:?}")]
    Encoding { column: String, token: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
