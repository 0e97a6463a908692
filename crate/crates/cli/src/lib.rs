//! Front end for `symvar`: job documents, commands and report rendering.

pub mod commands;
pub mod document;
pub mod render;

use symvar_core::{Error, ErrorKind};

pub const EXIT_SPEC: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;
pub const EXIT_CONTRACT: i32 = 4;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Spec(String),
    #[error("{context}: {error}")]
    Core { context: String, error: Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec(_) => EXIT_SPEC,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core { error, .. } => match error.kind() {
                ErrorKind::Invalid => EXIT_SPEC,
                ErrorKind::Refused => EXIT_REFUSED,
                ErrorKind::ContractViolation => EXIT_CONTRACT,
            },
        }
    }
}

pub use commands::{run_command, Command, Options};
pub use document::{emit_spec, parse_spec, resolve, Job, SpecDocument};
