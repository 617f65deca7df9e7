//! State files, reports and subcommand implementations behind the `qfasym`
//! binary. Everything the binary does is reachable from here, so tests and
//! scripts can drive the same code paths without spawning a process.

pub mod check;
pub mod commands;
mod error;
pub mod json;
pub mod report;
pub mod state_file;

pub use error::CliError;
