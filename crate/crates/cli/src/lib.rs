//! Command-line front end for `effcone-core`: argument parsing helpers,
//! configuration, JSON/text/CSV rendering and the subcommand drivers.

pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod render;

pub use commands::Outcome;
pub use config::{Config, CONFIG_ENV};
pub use error::CliError;
