use std::io;

use fock_core::FockError;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const UNSUPPORTED: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse complex literal `{token}`: {reason}")]
    ComplexLiteral { token: String, reason: &'static str },
    #[error("{0}")]
    Usage(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error("malformed fockmat input at line {line}: {reason}")]
    Fockmat { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ComplexLiteral { .. } | CliError::Usage(_) | CliError::Fockmat { .. } => exit::USAGE,
            CliError::Unsupported(_) => exit::UNSUPPORTED,
            CliError::Fock(e) => match e {
                FockError::UnsupportedWeight
                | FockError::WitnessUndefined
                | FockError::ZeroWeight
                | FockError::Unbounded
                | FockError::EigenvalueBoundUndefined => exit::UNSUPPORTED,
                FockError::InvalidDimension { .. } => exit::USAGE,
                _ => exit::VERIFY_FAILED,
            },
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => exit::USAGE,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
