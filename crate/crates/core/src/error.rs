use thiserror::Error;

use crate::decimal::DecimalError;
use crate::enclosure::EnclosureError;
use crate::sieve::SieveError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Sieve(#[from] SieveError),
    #[error(transparent)]
    Enclosure(#[from] EnclosureError),
    #[error(transparent)]
    Decimal(#[from] DecimalError),
    #[error("scan to {requested} exceeds the configured ceiling {ceiling}")]
    CeilingExceeded { requested: u64, ceiling: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed checkpoint file: {0}")]
    Checkpoint(String),
    #[error("incompatible checkpoint: {0}")]
    IncompatibleCheckpoint(String),
    #[error("hypothesis `{key}` does not apply: {reason}")]
    HypothesisRange { key: String, reason: String },
    #[error("ledger: {0}")]
    Ledger(String),
    #[error("pipeline `{pipeline}` failed at {step}: {reason}")]
    Pipeline {
        pipeline: String,
        step: String,
        reason: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
