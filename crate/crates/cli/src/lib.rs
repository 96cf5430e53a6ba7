//! Library side of the `suq2` command line: expression parsing, run configuration,
//! the invariant suites and their machine-readable reports.

pub mod commands;
pub mod config;
pub mod parse;
pub mod report;
pub mod suites;
