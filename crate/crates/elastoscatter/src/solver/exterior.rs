//! Fundamental-solutions collocation for the exterior scattering problem.
//!
//! Sources of the fundamental tensor are placed on a shrunk copy of the
//! boundary; their vector coefficients are fit by least squares so that the
//! total field satisfies the boundary condition at the collocation nodes.
//! The scattered field is automatically radiating. Residuals are reported on
//! a held-out offset grid of the same resolution.

use faer::prelude::*;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{BoundaryCondition, IncidentField, TruncatedSvdLsq};
use crate::elasto::{kupradze_tensor, kupradze_traction, CMat3, CVec3, Material, RVec3};
use crate::geometry::{build_mesh, held_out_mesh, ObstacleShape, PointClass, SurfaceMesh};
use crate::{Error, Result};

/// Discretization parameters of the collocation solve.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SolverParams {
    pub n_theta: usize,
    pub n_phi: usize,
    pub shrink: f64,
    #[serde(default = "default_svd_threshold")]
    pub svd_threshold: f64,
    /// keep every step-th mesh node as a source (1 = all nodes)
    #[serde(default = "default_source_step")]
    pub source_step: usize,
}

fn default_svd_threshold() -> f64 {
    1e-12
}

fn default_source_step() -> usize {
    1
}

impl Default for SolverParams {
    fn default() -> Self {
        Self {
            n_theta: 24,
            n_phi: 48,
            shrink: 0.7,
            svd_threshold: 1e-12,
            source_step: 1,
        }
    }
}

/// Held-out boundary residual of a solve.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ResidualReport {
    /// max |B(U_total)| over the held-out nodes
    pub max_absolute: f64,
    /// max |B(U_incident)| over the held-out nodes (the data scale)
    pub data_scale: f64,
    /// max_absolute / data_scale (zero for zero incident data)
    pub relative: f64,
}

/// A radiating scattered field as a finite sum of fundamental-tensor sources.
#[derive(Debug, Clone)]
pub struct ScatteringSolution {
    pub sources: Vec<RVec3>,
    pub coefficients: Vec<CVec3>,
    pub material: Material,
    pub shape: ObstacleShape,
    pub bc: BoundaryCondition,
    pub incident: IncidentField,
    pub residual_report: ResidualReport,
}

impl ScatteringSolution {
    fn check_exterior(&self, x: &RVec3) -> Result<()> {
        if self.shape.classify(x) == PointClass::Interior {
            return Err(Error::InteriorPoint);
        }
        Ok(())
    }

    /// Scattered field Σ_k Ups(x, z_k) c_k at an exterior (or boundary) point.
    pub fn eval_scattered(&self, x: &RVec3) -> Result<CVec3> {
        self.check_exterior(x)?;
        self.eval_scattered_unchecked(x)
    }

    pub(crate) fn eval_scattered_unchecked(&self, x: &RVec3) -> Result<CVec3> {
        let mut acc = CVec3::zeros();
        for (z, c) in self.sources.iter().zip(&self.coefficients) {
            acc += kupradze_tensor(x, z, &self.material)? * c;
        }
        Ok(acc)
    }

    /// Total field: incident plus scattered.
    pub fn eval_total(&self, x: &RVec3) -> Result<CVec3> {
        Ok(self.incident.field(x, &self.material)? + self.eval_scattered(x)?)
    }

    /// Traction of the scattered field, in closed form.
    pub fn scattered_traction(&self, x: &RVec3, normal: &RVec3) -> Result<CVec3> {
        self.check_exterior(x)?;
        let mut acc = CVec3::zeros();
        for (z, c) in self.sources.iter().zip(&self.coefficients) {
            acc += kupradze_traction(x, normal, z, &self.material)? * c;
        }
        Ok(acc)
    }

    /// Traction of the total field.
    pub fn total_traction(&self, x: &RVec3, normal: &RVec3) -> Result<CVec3> {
        Ok(self.incident.traction(x, normal, &self.material)? + self.scattered_traction(x, normal)?)
    }
}

/// Assembled and factorized collocation operator for one obstacle, boundary
/// condition and material; reusable across incident fields.
pub struct CollocationOperator {
    pub shape: ObstacleShape,
    pub bc: BoundaryCondition,
    pub material: Material,
    pub params: SolverParams,
    mesh: SurfaceMesh,
    held: SurfaceMesh,
    sources: Vec<RVec3>,
    lsq: TruncatedSvdLsq,
}

impl CollocationOperator {
    pub fn new(
        shape: &ObstacleShape,
        bc: BoundaryCondition,
        mat: &Material,
        params: &SolverParams,
    ) -> Result<Self> {
        bc.validate()?;
        mat.validate()?;
        let mesh = build_mesh(shape, params.n_theta, params.n_phi)?;
        let held = held_out_mesh(shape, params.n_theta, params.n_phi)?;
        let sources = mesh.auxiliary_surface(params.shrink, params.source_step)?;
        for z in &sources {
            if shape.classify(z) != PointClass::Interior {
                return Err(Error::Geometry(
                    "auxiliary source escaped the obstacle interior".into(),
                ));
            }
        }
        let nrows = 3 * mesh.len();
        let ncols = 3 * sources.len();
        // block rows are independent; assemble in parallel, order preserved
        let blocks: Vec<Vec<CMat3>> = (0..mesh.len())
            .into_par_iter()
            .map(|i| {
                let x = mesh.nodes[i];
                let nu = mesh.normals[i];
                sources
                    .iter()
                    .map(|z| boundary_block(&bc, &x, &nu, z, mat).expect("off-surface source"))
                    .collect()
            })
            .collect();
        let a = Mat::from_fn(nrows, ncols, |r, c| {
            let (i, ri) = (r / 3, r % 3);
            let (k, ck) = (c / 3, c % 3);
            blocks[i][k][(ri, ck)]
        });
        let lsq = TruncatedSvdLsq::new(a, params.svd_threshold)?;
        let min_rank = (0.25 * ncols as f64).ceil() as usize;
        if lsq.rank() < min_rank {
            return Err(Error::IllConditioned {
                rank: lsq.rank(),
                min_rank,
            });
        }
        Ok(Self {
            shape: shape.clone(),
            bc,
            material: *mat,
            params: *params,
            mesh,
            held,
            sources,
            lsq,
        })
    }

    pub fn mesh(&self) -> &SurfaceMesh {
        &self.mesh
    }

    pub fn sources(&self) -> &[RVec3] {
        &self.sources
    }

    /// Solve for one incident field and report held-out residuals.
    pub fn solve(&self, incident: IncidentField) -> Result<ScatteringSolution> {
        incident.validate(&self.shape)?;
        let mat = &self.material;
        let mut rhs = vec![Complex64::new(0.0, 0.0); 3 * self.mesh.len()];
        for i in 0..self.mesh.len() {
            let b = boundary_data(&self.bc, &incident, &self.mesh.nodes[i], &self.mesh.normals[i], mat)?;
            for ri in 0..3 {
                rhs[3 * i + ri] = -b[ri];
            }
        }
        let x = self.lsq.solve(&rhs);
        let coefficients: Vec<CVec3> = x
            .chunks_exact(3)
            .map(|c| CVec3::new(c[0], c[1], c[2]))
            .collect();
        let mut solution = ScatteringSolution {
            sources: self.sources.clone(),
            coefficients,
            material: *mat,
            shape: self.shape.clone(),
            bc: self.bc,
            incident,
            residual_report: ResidualReport {
                max_absolute: 0.0,
                data_scale: 0.0,
                relative: 0.0,
            },
        };
        solution.residual_report = self.held_out_residual(&solution)?;
        Ok(solution)
    }

    /// Residual of the boundary condition on the held-out grid.
    fn held_out_residual(&self, sol: &ScatteringSolution) -> Result<ResidualReport> {
        let mat = &self.material;
        let mut max_absolute = 0.0f64;
        let mut data_scale = 0.0f64;
        for i in 0..self.held.len() {
            let x = self.held.nodes[i];
            let nu = self.held.normals[i];
            let inc = boundary_data(&self.bc, &sol.incident, &x, &nu, mat)?;
            let scat = boundary_operator_scattered(&self.bc, sol, &x, &nu)?;
            max_absolute = max_absolute.max((inc + scat).norm());
            data_scale = data_scale.max(inc.norm());
        }
        let relative = if data_scale > 0.0 {
            max_absolute / data_scale
        } else {
            max_absolute
        };
        Ok(ResidualReport {
            max_absolute,
            data_scale,
            relative,
        })
    }
}

/// 3×3 block of the collocation matrix: the boundary operator applied to the
/// tensor column sources at z, evaluated at the surface point x.
fn boundary_block(
    bc: &BoundaryCondition,
    x: &RVec3,
    normal: &RVec3,
    z: &RVec3,
    mat: &Material,
) -> Result<CMat3> {
    Ok(match bc {
        BoundaryCondition::Dirichlet => kupradze_tensor(x, z, mat)?,
        BoundaryCondition::Neumann => kupradze_traction(x, normal, z, mat)?,
        BoundaryCondition::Robin { .. } => {
            kupradze_traction(x, normal, z, mat)? + kupradze_tensor(x, z, mat)? * bc.robin_constant()
        }
    })
}

/// Boundary operator applied to the incident field at a surface point.
fn boundary_data(
    bc: &BoundaryCondition,
    incident: &IncidentField,
    x: &RVec3,
    normal: &RVec3,
    mat: &Material,
) -> Result<CVec3> {
    Ok(match bc {
        BoundaryCondition::Dirichlet => incident.field(x, mat)?,
        BoundaryCondition::Neumann => incident.traction(x, normal, mat)?,
        BoundaryCondition::Robin { .. } => {
            incident.traction(x, normal, mat)? + incident.field(x, mat)? * bc.robin_constant()
        }
    })
}

/// Boundary operator applied to the scattered part of a solution.
fn boundary_operator_scattered(
    bc: &BoundaryCondition,
    sol: &ScatteringSolution,
    x: &RVec3,
    normal: &RVec3,
) -> Result<CVec3> {
    Ok(match bc {
        BoundaryCondition::Dirichlet => sol.eval_scattered_unchecked(x)?,
        BoundaryCondition::Neumann => sol.scattered_traction(x, normal)?,
        BoundaryCondition::Robin { .. } => {
            sol.scattered_traction(x, normal)?
                + sol.eval_scattered_unchecked(x)? * bc.robin_constant()
        }
    })
}

/// One-shot exterior solve.
pub fn solve_exterior(
    shape: &ObstacleShape,
    bc: BoundaryCondition,
    incident: IncidentField,
    mat: &Material,
    params: &SolverParams,
) -> Result<ScatteringSolution> {
    CollocationOperator::new(shape, bc, mat, params)?.solve(incident)
}

/// Green-tensor evaluation G(x, y) eta for the exterior problem: the total
/// field of a point-source solve (the fundamental tensor minus the radiating
/// corrector that enforces the boundary condition).
pub fn green_tensor_eval(
    shape: &ObstacleShape,
    bc: BoundaryCondition,
    mat: &Material,
    y: &RVec3,
    eta: &RVec3,
    x: &RVec3,
    params: &SolverParams,
) -> Result<CVec3> {
    let sol = solve_exterior(
        shape,
        bc,
        IncidentField::point_source(*y, *eta),
        mat,
        params,
    )?;
    sol.eval_total(x)
}
