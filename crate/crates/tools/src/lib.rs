//! File formats, verification suites and command implementations on top of
//! `crystal-core`.
//!
//! Vertex indices are 1-based in every file format and message produced here.

pub mod commands;
pub mod error;
pub mod format;
pub mod input;
pub mod verify;

pub use commands::{cmd_graph, cmd_tensor, explore};
pub use error::CliError;
pub use verify::{run_suite, Suite, SuiteOutcome, VerifyParams};
