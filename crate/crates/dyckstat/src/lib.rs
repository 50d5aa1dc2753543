//! Command-line tool, output formats and weight files for `dyckstat-core`.

pub mod cli;
pub mod format;
pub mod verify;
pub mod weightspec;
