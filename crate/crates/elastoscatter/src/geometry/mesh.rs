//! Quadrature meshes on obstacle boundaries: Gauss-Legendre in cos θ times a
//! uniform trapezoid in φ, mapped through the polar parametrization. Also the
//! interior auxiliary surface for source placement and an offset evaluation
//! grid used for held-out residuals.

use crate::elasto::RVec3;
use crate::special::gauss_legendre;
use crate::{Error, Result};

use super::shape::{ObstacleShape, PointClass};

/// Quadrature nodes, outward unit normals and weights on a closed surface.
#[derive(Debug, Clone)]
pub struct SurfaceMesh {
    pub nodes: Vec<RVec3>,
    pub normals: Vec<RVec3>,
    pub weights: Vec<f64>,
    pub shape: ObstacleShape,
    pub resolution: (usize, usize),
}

impl SurfaceMesh {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Total quadrature weight, i.e. the surface area.
    pub fn area(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Local inter-node spacing estimate at node i: sqrt of its weight.
    pub fn local_spacing(&self, i: usize) -> f64 {
        self.weights[i].sqrt()
    }

    /// Interior auxiliary points: center + shrink (node - center) for every
    /// step-th node in each angular direction (step 1 keeps all nodes).
    pub fn auxiliary_surface(&self, shrink: f64, step: usize) -> Result<Vec<RVec3>> {
        if !(shrink > 0.0 && shrink < 1.0) {
            return Err(Error::Geometry(format!(
                "shrink factor must lie in (0, 1), got {shrink}"
            )));
        }
        if step == 0 {
            return Err(Error::Geometry("source decimation step must be >= 1".into()));
        }
        let (n_theta, n_phi) = self.resolution;
        let center = self.shape.center();
        let mut out = Vec::with_capacity(n_theta.div_ceil(step) * n_phi.div_ceil(step));
        for it in (0..n_theta).step_by(step) {
            for jp in (0..n_phi).step_by(step) {
                let node = self.nodes[it * n_phi + jp];
                let p = center + (node - center) * shrink;
                debug_assert_eq!(self.shape.classify(&p), PointClass::Interior);
                out.push(p);
            }
        }
        Ok(out)
    }
}

/// Build the product quadrature mesh at resolution (n_theta, n_phi).
///
/// Weights include the area Jacobian; normals come from the cross product of
/// the parametric tangents, oriented outward (positive dot with the ray from
/// the center, available for star-shaped bodies).
pub fn build_mesh(shape: &ObstacleShape, n_theta: usize, n_phi: usize) -> Result<SurfaceMesh> {
    assert!(n_theta >= 4 && n_phi >= 8, "mesh resolution too coarse");
    shape.validate()?;
    mesh_from_angular_grid(shape, &gauss_legendre(n_theta), n_phi, 0.0, (n_theta, n_phi))
}

/// Held-out evaluation grid of the same angular resolution: Gauss-Legendre
/// nodes of order n_theta + 1 in cos θ and a half-step offset in φ, so it
/// never overlaps the collocation mesh.
pub fn held_out_mesh(shape: &ObstacleShape, n_theta: usize, n_phi: usize) -> Result<SurfaceMesh> {
    shape.validate()?;
    let dphi = std::f64::consts::PI / n_phi as f64; // half of the φ step
    mesh_from_angular_grid(
        shape,
        &gauss_legendre(n_theta + 1),
        n_phi,
        dphi,
        (n_theta + 1, n_phi),
    )
}

fn mesh_from_angular_grid(
    shape: &ObstacleShape,
    gl: &[(f64, f64)],
    n_phi: usize,
    phi_offset: f64,
    resolution: (usize, usize),
) -> Result<SurfaceMesh> {
    let center = shape.center();
    let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
    let count = gl.len() * n_phi;
    let mut nodes = Vec::with_capacity(count);
    let mut normals = Vec::with_capacity(count);
    let mut weights = Vec::with_capacity(count);
    for &(t, wt) in gl {
        let theta = t.acos();
        let sin_theta = theta.sin();
        for j in 0..n_phi {
            let phi = phi_offset + dphi * j as f64;
            let p = shape.point(theta, phi);
            let (t_theta, t_phi) = shape.tangents(theta, phi);
            let cross = t_theta.cross(&t_phi);
            let jac = cross.norm();
            if !(jac > 0.0) {
                return Err(Error::InvalidShape(format!(
                    "degenerate parametrization at theta={theta:.3}, phi={phi:.3}"
                )));
            }
            let mut normal = cross / jac;
            // outward orientation for star-shaped bodies
            if normal.dot(&(p - center)) < 0.0 {
                normal = -normal;
            }
            nodes.push(p);
            normals.push(normal);
            // ds = |t_theta × t_phi| dθ dφ = (|...|/sin θ) dt dφ
            weights.push(wt * dphi * jac / sin_theta);
        }
    }
    Ok(SurfaceMesh {
        nodes,
        normals,
        weights,
        shape: shape.clone(),
        resolution,
    })
}
