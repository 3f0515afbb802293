//! Experiment harness: declarative configs, deterministic per-trial seeds,
//! CSV result stores, and SVG chart emission. The binary in `main.rs` is a
//! thin CLI over [`runner`].

pub mod config;
pub mod records;
pub mod runner;
pub mod svg;
