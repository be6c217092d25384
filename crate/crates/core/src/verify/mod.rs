//! Verification suites, seeded sampling and report output.

pub mod report;
pub mod sample;
pub mod suite;

pub use report::{emit_report, render_reports, ReportFormat, ReportWriteError, Status, VerificationReport};
pub use suite::{parse_selection, run_suite, ConfigError, Suite, SuiteConfig, REGISTRY};
