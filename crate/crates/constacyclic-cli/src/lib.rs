//! Command-line surface for the constacyclic-core library: spec files,
//! classification, closed-form duals with oracle verification, predicate
//! checks, codeword enumeration, worked-example fixtures, and the
//! differential sweep.

use std::fmt;

pub mod commands;
pub mod fixtures;
pub mod schema;

/// Errors at the CLI boundary. Everything here maps to exit code 2; the
/// internal-mismatch exit code 3 is produced by commands, not errors.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Core(constacyclic_core::Error),
}

impl From<constacyclic_core::Error> for CliError {
    fn from(e: constacyclic_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(msg) => write!(f, "io error: {msg}"),
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Output text plus the process exit code: 0 success/true, 1 predicate
/// false, 2 input error (via [`CliError`]), 3 internal mismatch.
#[derive(Debug)]
pub struct CommandOutput {
    pub text: String,
    pub exit: i32,
}
