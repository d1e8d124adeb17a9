//! Command-line front end for `fock-core`: classification reports, the
//! verification suite, witness tables and matrix export.

pub mod cli;
pub mod complex;
pub mod config;
pub mod error;
pub mod format;
pub mod report;
pub mod verify;

pub use cli::run;
pub use error::{CliError, CliResult};
