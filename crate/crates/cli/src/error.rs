use std::path::PathBuf;

use mdgraph::Error;
use thiserror::Error as ThisError;

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_NOT_STRONG: u8 = 4;
pub const EXIT_VIOLATION: u8 = 5;
pub const EXIT_BUDGET: u8 = 6;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Read(PathBuf, std::io::Error),
    #[error("cannot write {0}: {1}")]
    Write(PathBuf, std::io::Error),
    #[error("{0}: {1}")]
    File(PathBuf, Error),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{failed} propert{} failed", if *.failed == 1 { "y" } else { "ies" })]
    Violation { output: String, failed: usize },
}

fn core_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::NotStronglyConnected { .. } => EXIT_NOT_STRONG,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            // an unreadable input file is reported like a malformed one
            CliError::Read(..) => EXIT_PARSE,
            CliError::Write(..) | CliError::Usage(_) => EXIT_USAGE,
            CliError::File(_, e) | CliError::Core(e) => core_code(e),
            CliError::Violation { .. } => EXIT_VIOLATION,
        }
    }
}
