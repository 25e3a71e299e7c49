//! Command-line front end over `socle-core`: expression parsing, one
//! subcommand per pipeline stage, deterministic JSON reports, and a
//! `verify-paper` acceptance runner.

pub mod app;
pub mod parser;
pub mod report;
