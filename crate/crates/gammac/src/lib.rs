//! File formats, reports, thread-pool drivers and the command line for
//! `gammac-core`.

pub mod battery;
pub mod checkpoint;
pub mod cli;
pub mod format;
pub mod parallel;
pub mod report;
pub mod specfile;
