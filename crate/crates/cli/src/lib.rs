//! Command-line front end for `liegeo-core`: algebra files, reports and the
//! reproduction suite.

pub mod commands;
pub mod file;
pub mod report;
pub mod suite;
