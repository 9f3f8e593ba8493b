//! Identity verification, expression evaluation and table output on top of
//! `gaussq-core`.

pub mod cli;
pub mod expr;
pub mod format;
pub mod identities;
pub mod tables;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("parse error {0}")]
    Parse(#[from] expr::ParseError),
    #[error(transparent)]
    Eval(#[from] expr::EvalError),
    #[error(transparent)]
    Core(#[from] gaussq_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
