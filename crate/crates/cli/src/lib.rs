//! Batch front end for the symrees engine: jobfile parsing, command
//! execution and report rendering.

pub mod exec;
pub mod jobfile;
pub mod paper;
pub mod render;

pub use exec::{exit_code, parse_error_report, run_job, Outcome, RunOptions, SCHEMA_VERSION};
pub use jobfile::{parse_jobfile, Command, Diagnostic, JobOptions, JobSpec, OutputFormat};
pub use render::render_text;
