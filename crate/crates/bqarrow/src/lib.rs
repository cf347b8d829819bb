//! File formats, knot tables, fuzzing and the command line for `bqarrow-core`.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod cli;
pub mod fixtures;
pub mod fuzz;
pub mod io;
pub mod knotdb;

pub use bqarrow_core as core;
