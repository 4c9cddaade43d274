//! Far-field patterns (source-sum and boundary-integral routes), the
//! pressure/shear projectors, far-field matrices with their four-way split,
//! Green-tensor asymptotics checks and the spherical-harmonic mode analyzer.

mod asymptotics;
mod matrix;
mod modes;
mod pattern;
mod projector;

pub use asymptotics::{green_asymptotics_check, AsymptoticsRow};
pub use matrix::{farfield_matrix, split_pattern, FarFieldMatrix};
pub use modes::{fit_hankel_modes, rellich_modes, sphere_mode_coefficients, ModeFit, RellichReport};
pub use pattern::{
    farfield_boundary_integral, farfield_from_sources, FarFieldPattern, PatternTag,
};
pub use projector::projector;
