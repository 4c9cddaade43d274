//! Finite-difference probes: the Navier residual oracle used throughout the
//! test suites, and a central-difference Jacobian.

use num_complex::Complex64;

use super::{CMat3, CVec3, Material, RVec3};

/// Central-difference residual of the Navier operator,
/// mu Δu + (lambda + mu) ∇(∇·u) + omega² u, second order in h.
///
/// For an exact solution the residual converges to zero like h²; applied to a
/// constant field it returns omega² u exactly.
pub fn navier_residual_fd<F>(field: &F, x: &RVec3, mat: &Material, h: f64) -> CVec3
where
    F: Fn(&RVec3) -> CVec3,
{
    let center = field(x);
    let mut lap = -center * Complex64::new(6.0, 0.0);
    let mut grad_div = CVec3::zeros();
    let axes = [
        RVec3::new(1.0, 0.0, 0.0),
        RVec3::new(0.0, 1.0, 0.0),
        RVec3::new(0.0, 0.0, 1.0),
    ];
    for e in &axes {
        lap += field(&(x + e * h)) + field(&(x - e * h));
    }
    lap /= Complex64::new(h * h, 0.0);
    for i in 0..3 {
        // (∇∇·u)_i = Σ_j ∂_i ∂_j u_j
        for j in 0..3 {
            let d = if i == j {
                (field(&(x + axes[i] * h))[j] - center[j] * 2.0 + field(&(x - axes[i] * h))[j])
                    / (h * h)
            } else {
                (field(&(x + axes[i] * h + axes[j] * h))[j]
                    - field(&(x + axes[i] * h - axes[j] * h))[j]
                    - field(&(x - axes[i] * h + axes[j] * h))[j]
                    + field(&(x - axes[i] * h - axes[j] * h))[j])
                    / (4.0 * h * h)
            };
            grad_div[i] += d;
        }
    }
    lap * Complex64::new(mat.mu, 0.0)
        + grad_div * Complex64::new(mat.lambda + mat.mu, 0.0)
        + center * Complex64::new(mat.omega * mat.omega, 0.0)
}

/// Central-difference Jacobian J[(i, k)] = ∂u_i/∂x_k.
pub fn fd_jacobian<F>(field: &F, x: &RVec3, h: f64) -> CMat3
where
    F: Fn(&RVec3) -> CVec3,
{
    let mut jac = CMat3::zeros();
    for k in 0..3 {
        let mut e = RVec3::zeros();
        e[k] = h;
        let up = field(&(x + e));
        let dn = field(&(x - e));
        for i in 0..3 {
            jac[(i, k)] = (up[i] - dn[i]) / (2.0 * h);
        }
    }
    jac
}
