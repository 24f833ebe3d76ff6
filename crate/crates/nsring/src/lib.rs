//! Command-line front end and file formats for the `nsring-core` engine.

pub mod cli;
pub mod expr;
pub mod facts;
pub mod output;
pub mod paper_check;
