//! Command-line front end for `polyfock-core`: canonical JSON and DOT
//! output, and the verification suites behind `polyfock verify`.

pub mod cli;
pub mod dot;
pub mod json;
pub mod suites;
