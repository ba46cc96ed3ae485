//! IO companion to `okings-core`: the upper-triangle graph text format, DOT
//! export, report rendering, and partitioned verification drivers used by
//! the `okings` binary.

pub mod dot;
pub mod format;
pub mod parallel;
pub mod report;
