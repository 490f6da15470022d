//! Library surface of the `trinodiff` verifier: configuration, the check
//! registry, the runner and report rendering. The binary in `main.rs` is a
//! thin argument-parsing layer over these.

pub mod checks;
pub mod config;
pub mod report;

pub use checks::{build_checks, run_suites};
pub use config::{ConfigError, OutputFormat, RunConfig, Suite};
pub use report::{render_report, run_failed, summarize, CheckResult, CheckStatus, Summary};
