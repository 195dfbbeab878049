//! Command-line driver, wire formats, and verification harness for the
//! gainact library.

pub mod commands;
pub mod json;
pub mod report;
pub mod targets;

pub use commands::run;
