//! Command-line companion to `hamcolor-core`: file formats, JSON reports, a
//! parallel driver for the exact search and the `hamcolor` subcommands.

pub mod cli;
pub mod error;
pub mod exact;
pub mod io;
pub mod report;
pub mod search;

pub use error::CliError;
