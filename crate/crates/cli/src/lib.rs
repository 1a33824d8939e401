//! Command implementations behind the `weightdec` binary.
//!
//! Each command renders its report to a `String` so the binary stays a thin
//! dispatcher and the formatting can be tested without spawning processes.

pub mod commands;
pub mod exit;
pub mod sweep;

pub use exit::{CliError, ExitCode};
