//! Std companion to `gft-core`: series and report file formats, parallel grid
//! scans and the `gft` command line.

pub mod cli;
pub mod format;
pub mod parallel;

pub use gft_core;
