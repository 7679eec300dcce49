//! CLI, file I/O, the tree scanner, and the verification suites.
//!
//! The scanner is the only concurrent component: workers share immutable
//! inputs, produce independent result records, and results are merged
//! single-threaded in canonical order, so output is identical for any
//! worker count.

mod cli;
pub mod io;
mod scan;
pub mod verify;

pub use crate::config::RunConfig;
pub use cli::cli;
pub use scan::{scan_trees, Collision, RuntimeStats, TreeScanReport};
pub use verify::{verify_suite, CheckResult, VerifyLevel, VerifyReport};
