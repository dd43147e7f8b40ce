//! File formats, JSON reports and the `induced` command-line driver.
//!
//! The binary is a thin wrapper around [`main_with`]; everything it does is
//! reachable from this library so that tests can drive it in-process.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod commands;
pub mod formats;
pub mod report;
pub mod suite;

pub use commands::{main_with, run, Cli, Exit};
