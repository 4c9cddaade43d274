//! Forward solver and verification toolkit for time-harmonic elastic wave
//! scattering by a bounded 3-D obstacle governed by the Navier equation.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! special functions -> elastic kernels -> surface geometry
//!     -> layer potentials / fundamental-solution collocation
//!     -> far-field analysis -> experiments (CLI)
//! ```
//!
//! All quantities are dimensionless (density is normalized to 1).

pub mod config;
pub mod elasto;
pub mod error;
pub mod experiment;
pub mod farfield;
pub mod geometry;
pub mod potential;
pub mod report;
pub mod solver;
pub mod special;

pub use error::{Error, Result};

/// Crate version string embedded in emitted metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
