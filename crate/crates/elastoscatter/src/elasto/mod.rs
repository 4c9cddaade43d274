//! Material parameters, plane waves, strain/stress/traction operators and the
//! fundamental tensor of the Navier operator with its analytic traction.

mod fd;
mod kernel;
mod material;
mod operators;
mod plane;

pub use fd::{fd_jacobian, navier_residual_fd};
pub use kernel::{kupradze_radial, kupradze_tensor, kupradze_traction, KupradzeRadial};
pub use material::Material;
pub use operators::{strain, stress, traction, traction_curl_form};
pub use plane::{
    plane_full_wave, plane_p_wave, plane_s_wave, plane_wave_field, plane_wave_jacobian, PlaneWave,
    WaveKind,
};

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

/// Complex 3-vector used for displacement fields and polarizations.
pub type CVec3 = Vector3<Complex64>;
/// Complex 3×3 matrix used for tensors and Jacobians.
pub type CMat3 = Matrix3<Complex64>;
/// Real 3-vector for points, directions and normals.
pub type RVec3 = Vector3<f64>;

/// Lift a real vector into the complex field.
pub fn complexify(v: &RVec3) -> CVec3 {
    v.map(|x| Complex64::new(x, 0.0))
}

/// Column j of a complex 3×3 matrix as an owned vector.
pub fn column_vec(m: &CMat3, j: usize) -> CVec3 {
    CVec3::new(m[(0, j)], m[(1, j)], m[(2, j)])
}
