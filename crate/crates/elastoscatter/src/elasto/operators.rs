//! Strain, stress and surface traction acting on displacement Jacobians.
//!
//! Jacobian convention: J[(i, k)] = ∂u_i/∂x_k.

use num_complex::Complex64;

use super::{complexify, CMat3, CVec3, Material, RVec3};

/// Linearized strain tensor (J + Jᵀ)/2.
pub fn strain(jacobian: &CMat3) -> CMat3 {
    (jacobian + jacobian.transpose()) * Complex64::new(0.5, 0.0)
}

/// Stress tensor lambda tr(J) I + 2 mu strain(J).
pub fn stress(mat: &Material, jacobian: &CMat3) -> CMat3 {
    let div = jacobian.trace();
    let mut out = strain(jacobian) * Complex64::new(2.0 * mat.mu, 0.0);
    for i in 0..3 {
        out[(i, i)] += div * mat.lambda;
    }
    out
}

/// Surface traction nu · tau(u) = lambda (div u) nu + mu (J + Jᵀ) nu.
pub fn traction(mat: &Material, normal: &RVec3, jacobian: &CMat3) -> CVec3 {
    stress(mat, jacobian) * complexify(normal)
}

/// The equivalent curl form 2 mu (nu·∇)u + lambda nu (div u) + mu nu × (∇×u).
pub fn traction_curl_form(mat: &Material, normal: &RVec3, jacobian: &CMat3) -> CVec3 {
    let nu = complexify(normal);
    let j = jacobian;
    let directional = j * nu; // (nu·∇)u
    let div = j.trace();
    let curl = CVec3::new(
        j[(2, 1)] - j[(1, 2)],
        j[(0, 2)] - j[(2, 0)],
        j[(1, 0)] - j[(0, 1)],
    );
    let cross = CVec3::new(
        nu[1] * curl[2] - nu[2] * curl[1],
        nu[2] * curl[0] - nu[0] * curl[2],
        nu[0] * curl[1] - nu[1] * curl[0],
    );
    directional * Complex64::new(2.0 * mat.mu, 0.0)
        + nu * (div * mat.lambda)
        + cross * Complex64::new(mat.mu, 0.0)
}
