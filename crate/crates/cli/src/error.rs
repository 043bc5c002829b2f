use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] effcone_core::Error),
    #[error("config file {path}: {message}")]
    Config { path: PathBuf, message: String },
    #[error("cannot read {source_name}: {source}")]
    Io {
        source_name: String,
        source: std::io::Error,
    },
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
