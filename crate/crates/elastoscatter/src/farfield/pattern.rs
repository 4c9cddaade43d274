//! Far-field patterns of radiating fields by two independent routes.
//!
//! Normalization: the scattered field behaves like
//! U(x) = (e^{i κ_p r}/r) U_p^∞(x̂) + (e^{i κ_s r}/r) U_s^∞(x̂) + O(1/r²),
//! so the 1/4π of the fundamental tensor stays inside the pattern values.
//!
//! Route 1 (source sum): the tensor's own large-argument form applied to the
//! collocation sources,
//!   U_p^∞(x̂) = (1/(4π(λ+2μ))) A(x̂) Σ_k e^{-i κ_p x̂·z_k} c_k,
//!   U_s^∞(x̂) = (1/(4πμ)) (I - A(x̂)) Σ_k e^{-i κ_s x̂·z_k} c_k.
//!
//! Route 2 (boundary integral): the representation-formula form with the
//! plane-wave-type matrix fields x̂ x̂ᵀ e^{-i κ_p x̂·y} and
//! (I - x̂ x̂ᵀ) e^{-i κ_s x̂·y}, whose tractions are closed-form.

use nalgebra::Matrix3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::elasto::{complexify, CVec3, Material, RVec3};
use crate::geometry::SurfaceMesh;
use crate::potential::SurfaceDensity;
use crate::solver::ScatteringSolution;
use crate::Result;

use super::projector;

const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternTag {
    PPart,
    SPart,
    Full,
}

/// A sampled far-field pattern on the unit sphere.
#[derive(Debug, Clone)]
pub struct FarFieldPattern {
    pub directions: Vec<RVec3>,
    pub values: Vec<CVec3>,
    pub tag: PatternTag,
}

impl FarFieldPattern {
    /// Largest violation of the structural invariant: p-parts are parallel to
    /// their direction, s-parts orthogonal. Returns the worst relative
    /// misalignment over all sampled directions.
    pub fn structure_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for (dir, v) in self.directions.iter().zip(&self.values) {
            let norm = v.norm();
            if norm == 0.0 {
                continue;
            }
            let radial = complexify(dir) * complexify(dir).dot(v);
            let defect = match self.tag {
                PatternTag::PPart => (v - radial).norm() / norm,
                PatternTag::SPart => radial.norm() / norm,
                PatternTag::Full => 0.0,
            };
            worst = worst.max(defect);
        }
        worst
    }

    pub fn max_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Route 1: far-field patterns of a collocation solution from its sources.
pub fn farfield_from_sources(
    sol: &ScatteringSolution,
    directions: &[RVec3],
) -> Result<(FarFieldPattern, FarFieldPattern)> {
    let mat = &sol.material;
    let (kp, ks) = mat.wave_numbers();
    let cp = 1.0 / (FOUR_PI * (mat.lambda + 2.0 * mat.mu));
    let cs = 1.0 / (FOUR_PI * mat.mu);
    let mut p_values = Vec::with_capacity(directions.len());
    let mut s_values = Vec::with_capacity(directions.len());
    for dir in directions {
        let a = projector(dir)?;
        let mut sum_p = CVec3::zeros();
        let mut sum_s = CVec3::zeros();
        for (z, c) in sol.sources.iter().zip(&sol.coefficients) {
            sum_p += c * Complex64::from_polar(1.0, -kp * dir.dot(z));
            sum_s += c * Complex64::from_polar(1.0, -ks * dir.dot(z));
        }
        p_values.push(apply_real(&a, &sum_p) * Complex64::new(cp, 0.0));
        s_values.push(apply_real(&(Matrix3::identity() - a), &sum_s) * Complex64::new(cs, 0.0));
    }
    Ok((
        FarFieldPattern {
            directions: directions.to_vec(),
            values: p_values,
            tag: PatternTag::PPart,
        },
        FarFieldPattern {
            directions: directions.to_vec(),
            values: s_values,
            tag: PatternTag::SPart,
        },
    ))
}

/// Route 2: far-field values at one direction from boundary traces of the
/// scattered field.
pub fn farfield_boundary_integral(
    mesh: &SurfaceMesh,
    trace_u: &SurfaceDensity,
    trace_tu: &SurfaceDensity,
    dir: &RVec3,
    mat: &Material,
) -> Result<(CVec3, CVec3)> {
    let (kp, ks) = mat.wave_numbers();
    let w2 = mat.omega * mat.omega;
    let a = projector(dir)?;
    let a_comp = Matrix3::identity() - a;
    let mut p_acc = CVec3::zeros();
    let mut s_acc = CVec3::zeros();
    for j in 0..mesh.len() {
        let y = mesh.nodes[j];
        let nu = mesh.normals[j];
        let w = mesh.weights[j];
        let u = trace_u.values()[j];
        let tu = trace_tu.values()[j];
        p_acc += pattern_integrand(&a, kp, dir, &y, &nu, &u, &tu, mat) * Complex64::new(w, 0.0);
        s_acc += pattern_integrand(&a_comp, ks, dir, &y, &nu, &u, &tu, mat) * Complex64::new(w, 0.0);
    }
    Ok((
        p_acc * Complex64::new(kp * kp / (FOUR_PI * w2), 0.0),
        s_acc * Complex64::new(ks * ks / (FOUR_PI * w2), 0.0),
    ))
}

/// Integrand [T_ν(M e^{-iκ x̂·y})]ᵀ u - M e^{-iκ x̂·y} T_ν u for a constant
/// real matrix M. The traction of the matrix plane-wave field is closed form:
/// column j has Jacobian -iκ e^{-iκ x̂·y} m_j x̂ᵀ.
#[allow(clippy::too_many_arguments)]
fn pattern_integrand(
    m: &Matrix3<f64>,
    kappa: f64,
    dir: &RVec3,
    y: &RVec3,
    nu: &RVec3,
    u: &CVec3,
    tu: &CVec3,
    mat: &Material,
) -> CVec3 {
    let phase = Complex64::from_polar(1.0, -kappa * dir.dot(y));
    let xn = dir.dot(nu);
    // T columns: -iκ e^{-iκ x̂·y} [λ (m_j·x̂) ν + μ ((x̂·ν) m_j + (m_j·ν) x̂)]
    let mut t_transpose_u = CVec3::zeros();
    for jcol in 0..3 {
        let mj = RVec3::new(m[(0, jcol)], m[(1, jcol)], m[(2, jcol)]);
        let t_col =
            nu * (mat.lambda * mj.dot(dir)) + mj * (mat.mu * xn) + dir * (mat.mu * mj.dot(nu));
        // (Tᵀ u)_j = t_col · u
        t_transpose_u[jcol] = Complex64::new(0.0, -kappa) * phase * complexify(&t_col).dot(u);
    }
    let m_tu = apply_real(m, tu) * phase;
    t_transpose_u - m_tu
}

fn apply_real(m: &Matrix3<f64>, v: &CVec3) -> CVec3 {
    let mut out = CVec3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            out[i] += v[j] * m[(i, j)];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::SphereQuadrature;

    #[test]
    fn zero_solution_gives_zero_patterns() {
        use crate::elasto::Material;
        use crate::geometry::ObstacleShape;
        use crate::solver::{BoundaryCondition, IncidentField, ResidualReport, ScatteringSolution};
        use nalgebra::Vector3;

        let sol = ScatteringSolution {
            sources: vec![Vector3::new(0.0, 0.0, 0.1), Vector3::new(0.1, 0.0, 0.0)],
            coefficients: vec![CVec3::zeros(); 2],
            material: Material::new(2.0, 1.0, 2.0).unwrap(),
            shape: ObstacleShape::Sphere {
                radius: 1.0,
                center: [0.0; 3],
            },
            bc: BoundaryCondition::Dirichlet,
            incident: IncidentField::point_source(Vector3::new(0.0, 0.0, 3.0), Vector3::zeros()),
            residual_report: ResidualReport {
                max_absolute: 0.0,
                data_scale: 0.0,
                relative: 0.0,
            },
        };
        let dirs: Vec<RVec3> = SphereQuadrature::new(6, 12)
            .nodes()
            .iter()
            .map(|n| n.dir)
            .collect();
        let (p, s) = farfield_from_sources(&sol, &dirs).unwrap();
        assert!(p.max_norm() == 0.0 && s.max_norm() == 0.0);
    }
}
