//! Command-line front end for `emdpoly`: polynomial and expectation queries,
//! Wiener indices, series coefficients, and verification sweeps with
//! machine-readable reports.

pub mod args;
pub mod checks;
mod commands;
mod error;
pub mod render;
pub mod report;

pub use commands::run;
pub use error::{CliError, ExitStatus};
