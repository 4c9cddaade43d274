//! The 3×3 far-field matrix per (observation, incidence) direction pair and
//! its four-way projector split.

use nalgebra::Matrix3;
use num_complex::Complex64;

use crate::elasto::{CMat3, Material, RVec3};
use crate::geometry::ObstacleShape;
use crate::solver::{BoundaryCondition, CollocationOperator, IncidentField, SolverParams};
use crate::elasto::{PlaneWave, WaveKind};
use crate::Result;

use super::{farfield_from_sources, projector};

/// Far-field matrix sampled on a direction grid: applying `matrices[i]` to a
/// polarization η reproduces the far field of the corresponding vector solve.
pub struct FarFieldMatrix {
    pub incident_direction: RVec3,
    pub directions: Vec<RVec3>,
    pub matrices: Vec<CMat3>,
    /// worst held-out boundary residual among the three basis solves
    pub residual: f64,
}

/// Assemble the far-field matrix from three full-wave solves with the
/// canonical basis polarizations.
pub fn farfield_matrix(
    shape: &ObstacleShape,
    bc: BoundaryCondition,
    mat: &Material,
    alpha: &RVec3,
    params: &SolverParams,
    directions: &[RVec3],
) -> Result<FarFieldMatrix> {
    let op = CollocationOperator::new(shape, bc, mat, params)?;
    let mut columns: Vec<Vec<crate::elasto::CVec3>> = Vec::with_capacity(3);
    let mut residual = 0.0f64;
    for j in 0..3 {
        let mut eta = RVec3::zeros();
        eta[j] = 1.0;
        let wave = PlaneWave::new(*alpha, eta, WaveKind::Full)?;
        let sol = op.solve(IncidentField::plane(wave))?;
        residual = residual.max(sol.residual_report.relative);
        let (p, s) = farfield_from_sources(&sol, directions)?;
        columns.push(
            p.values
                .iter()
                .zip(&s.values)
                .map(|(a, b)| a + b)
                .collect(),
        );
    }
    let matrices = (0..directions.len())
        .map(|i| {
            let mut m = CMat3::zeros();
            for j in 0..3 {
                for r in 0..3 {
                    m[(r, j)] = columns[j][i][r];
                }
            }
            m
        })
        .collect();
    Ok(FarFieldMatrix {
        incident_direction: *alpha,
        directions: directions.to_vec(),
        matrices,
        residual,
    })
}

/// Four-way split of a far-field matrix at a direction pair:
/// {A(x̂) M A(α), (I-A(x̂)) M A(α), A(x̂) M (I-A(α)), (I-A(x̂)) M (I-A(α))},
/// the normal/tangential blocks of the pure-pressure and pure-shear far
/// fields. The blocks sum to M exactly.
pub fn split_pattern(m: &CMat3, x_dir: &RVec3, alpha: &RVec3) -> Result<[CMat3; 4]> {
    let ax = real_to_complex(&projector(x_dir)?);
    let aa = real_to_complex(&projector(alpha)?);
    let id = CMat3::identity();
    let ix = id - ax;
    let ia = id - aa;
    Ok([ax * m * aa, ix * m * aa, ax * m * ia, ix * m * ia])
}

fn real_to_complex(m: &Matrix3<f64>) -> CMat3 {
    m.map(|x| Complex64::new(x, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Vector3;

    #[test]
    fn blocks_sum_to_the_matrix() {
        let m = CMat3::from_fn(|i, j| Complex64::new((i + 2 * j) as f64, (i as f64) - 1.0));
        let x_dir = Vector3::new(1.0, 2.0, -2.0).normalize();
        let alpha = Vector3::new(0.0, 0.0, 1.0);
        let blocks = split_pattern(&m, &x_dir, &alpha).unwrap();
        let sum = blocks[0] + blocks[1] + blocks[2] + blocks[3];
        assert!((sum - m).norm() < 1e-14 * m.norm());
    }

    #[test]
    fn identity_matrix_axis_aligned_split() {
        let m = CMat3::identity();
        let z = Vector3::new(0.0, 0.0, 1.0);
        let blocks = split_pattern(&m, &z, &z).unwrap();
        let a = real_to_complex(&projector(&z).unwrap());
        let ia = CMat3::identity() - a;
        assert!((blocks[0] - a).norm() < 1e-15);
        assert!(blocks[1].norm() < 1e-15);
        assert!(blocks[2].norm() < 1e-15);
        assert!((blocks[3] - ia).norm() < 1e-15);
    }
}
