//! Command-line front end: the expression parser, run configuration,
//! verification suites and verb dispatch behind the `polyfun` binary.

pub mod commands;
pub mod config;
pub mod parse;
pub mod suites;

pub use commands::{run, Output};
pub use config::{Format, RunConfig};
pub use parse::{parse, parse_with_degree, ParseError};
pub use suites::{run_suite, Instance, Status, SuiteOptions, SuiteReport, SUITES};
