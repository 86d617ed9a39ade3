//! Argument parsing and report types for the `parry` binary.

pub mod cli;
pub mod report;
