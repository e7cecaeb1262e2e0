//! Catalogs, parallel sweeps, verification suites and the command-line
//! front end for [`ballnum_core`].
//!
//! The worker count for parallel sweeps comes from the `BALLNUM_WORKERS`
//! environment variable, defaulting to the available parallelism. Output
//! order never depends on it.

pub mod catalog;
pub mod cli;
pub mod parallel;
pub mod verify;
