//! Large-source-distance behavior of the exterior Green tensor: for the
//! source receding along y = -σ α,
//!
//! ```text
//! G(x, -σα, ω) η = (e^{i κ_p σ} / 4πσ) P(x, α, κ_p) η
//!               + (e^{i κ_s σ} / 4πσ) S(x, α, κ_s) η + O(1/σ²),
//! ```
//!
//! where P and S are the total fields of the pure-pressure and pure-shear
//! plane-wave problems with incidence direction α and polarization η.

use num_complex::Complex64;
use serde::Serialize;

use crate::elasto::{Material, PlaneWave, RVec3, WaveKind};
use crate::geometry::ObstacleShape;
use crate::solver::{BoundaryCondition, CollocationOperator, IncidentField};
use crate::solver::SolverParams;
use crate::Result;

const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

/// Residual of the expansion at one source distance.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticsRow {
    pub sigma: f64,
    /// max |G η - leading terms| over the probe points
    pub residual: f64,
    /// residual scaled by σ², bounded if the remainder is O(1/σ²)
    pub scaled_residual: f64,
}

/// Compare point-source Green fields against the plane-wave expansion for a
/// sequence of source distances. All solves share one factorization.
pub fn green_asymptotics_check(
    shape: &ObstacleShape,
    bc: BoundaryCondition,
    mat: &Material,
    alpha: &RVec3,
    eta: &RVec3,
    x_list: &[RVec3],
    sigma_list: &[f64],
    params: &SolverParams,
) -> Result<Vec<AsymptoticsRow>> {
    let op = CollocationOperator::new(shape, bc, mat, params)?;
    let (kp, ks) = mat.wave_numbers();

    // total fields of the two pure incident plane waves
    let p_sol = op.solve(IncidentField::plane(PlaneWave::new(
        *alpha,
        *eta,
        WaveKind::Pressure,
    )?))?;
    let s_sol = op.solve(IncidentField::plane(PlaneWave::new(
        *alpha,
        *eta,
        WaveKind::Shear,
    )?))?;

    let mut rows = Vec::with_capacity(sigma_list.len());
    for &sigma in sigma_list {
        let y = -alpha * sigma;
        let g_sol = op.solve(IncidentField::point_source(y, *eta))?;
        let mut worst = 0.0f64;
        for x in x_list {
            let g = g_sol.eval_total(x)?;
            let p_total = p_sol.eval_total(x)?;
            let s_total = s_sol.eval_total(x)?;
            let lead = p_total * (Complex64::from_polar(1.0, kp * sigma) / (FOUR_PI * sigma))
                + s_total * (Complex64::from_polar(1.0, ks * sigma) / (FOUR_PI * sigma));
            worst = worst.max((g - lead).norm());
        }
        rows.push(AsymptoticsRow {
            sigma,
            residual: worst,
            scaled_residual: worst * sigma * sigma,
        });
    }
    Ok(rows)
}
