//! File formats and command implementations for the `lindex` tool.

pub mod commands;
pub mod error;
pub mod format;
pub mod verify;

pub use commands::{Method, Outcome, RunConfig};
pub use error::{CliError, Result};
