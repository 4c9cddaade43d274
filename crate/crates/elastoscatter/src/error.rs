//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("mode index out of range: |m|={m} exceeds n={n}")]
    ModeIndex { n: usize, m: i64 },

    #[error("invalid material: {0}")]
    InvalidMaterial(String),

    #[error("invalid wave: {0}")]
    InvalidWave(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("source and evaluation points coincide (|x-y| = {dist:.3e} below threshold {threshold:.3e})")]
    Coincident { dist: f64, threshold: f64 },

    #[error("evaluation point too close to surface (distance {dist:.3e}, need > {required:.3e})")]
    TooClose { dist: f64, required: f64 },

    #[error("evaluation point is not exterior to the obstacle")]
    InteriorPoint,

    #[error("degenerate material: kappa_p == kappa_s (lambda == -mu)")]
    DegenerateMaterial,

    #[error("collocation system ill-conditioned: post-truncation rank {rank} below {min_rank}")]
    IllConditioned { rank: usize, min_rank: usize },

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("mode fit failed: {0}")]
    FitFailure(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
