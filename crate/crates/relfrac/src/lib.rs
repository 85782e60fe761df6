//! Std companion to `relfrac-core`: graph files, JSON reports, wall-clock
//! deadlines, the reproduction suites and the `relfrac` command line.

pub mod cli;
pub mod deadline;
pub mod error;
pub mod io;
pub mod report;
pub mod selftest;
pub mod suites;

pub use cli::{run, Output};
pub use error::CliError;
