//! Batch front end for `cvwl-core`: presets or network files in, CSV out.

pub mod args;
pub mod config;
pub mod error;
pub mod format;
pub mod network_file;
pub mod reproduce;
pub mod run;

pub use config::{Command, Gains, RunConfig, StateSource, SweepParam, SweepSpec, Target};
pub use error::CliError;
pub use network_file::{parse_network, read_network, write_network, ParseError};
pub use run::{run, run_to};
