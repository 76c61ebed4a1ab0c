//! Batch verifier for the Fibonacci Lie algebra: dimension tables, homology,
//! named check suites, the Hopf cross-check and a basis cache.

pub mod cache;
pub mod checks;
pub mod commands;
pub mod report;

use thiserror::Error;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("corrupt cache: {0}")]
    CorruptCache(String),
    #[error("{0} check(s) failed")]
    Failed(usize),
    #[error(transparent)]
    Core(#[from] fiblie_core::Error),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
