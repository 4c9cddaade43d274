//! Single-layer elastic potential V(φ)(x) = ∫_{∂D} Ups(x, y) φ(y) ds(y),
//! its traction, and the two-sided traction jump estimate.
//!
//! All evaluations are off-surface; the jump relation is verified through
//! two-sided limits with Richardson extrapolation in the offset rather than
//! on-surface principal values.

use num_complex::Complex64;

use crate::elasto::{kupradze_tensor, kupradze_traction, CVec3, Material, RVec3};
use crate::geometry::SurfaceMesh;
use crate::{Error, Result};

/// A vector density sampled at the mesh nodes.
#[derive(Debug, Clone)]
pub struct SurfaceDensity {
    values: Vec<CVec3>,
}

impl SurfaceDensity {
    pub fn new(mesh: &SurfaceMesh, values: Vec<CVec3>) -> Result<Self> {
        if values.len() != mesh.len() {
            return Err(Error::Geometry(format!(
                "density has {} values for a mesh with {} nodes",
                values.len(),
                mesh.len()
            )));
        }
        Ok(Self { values })
    }

    pub fn zero(mesh: &SurfaceMesh) -> Self {
        Self {
            values: vec![CVec3::zeros(); mesh.len()],
        }
    }

    /// Sample a pointwise function of (node, outward normal).
    pub fn from_fn(mesh: &SurfaceMesh, f: impl Fn(&RVec3, &RVec3) -> CVec3) -> Self {
        Self {
            values: mesh
                .nodes
                .iter()
                .zip(&mesh.normals)
                .map(|(p, nu)| f(p, nu))
                .collect(),
        }
    }

    pub fn values(&self) -> &[CVec3] {
        &self.values
    }
}

/// Distance from x to the nearest node together with the local quadrature
/// spacing there.
fn nearest_node(mesh: &SurfaceMesh, x: &RVec3) -> (usize, f64) {
    let mut best = (0usize, f64::INFINITY);
    for (i, node) in mesh.nodes.iter().enumerate() {
        let d = (x - node).norm();
        if d < best.1 {
            best = (i, d);
        }
    }
    best
}

fn check_off_surface(mesh: &SurfaceMesh, x: &RVec3) -> Result<()> {
    let (i, dist) = nearest_node(mesh, x);
    let required = 2.0 * mesh.local_spacing(i);
    if dist < required {
        return Err(Error::TooClose { dist, required });
    }
    Ok(())
}

/// Quadrature sum Σ_j w_j Ups(x, y_j) φ_j without the distance guard.
pub fn single_layer_raw(
    mesh: &SurfaceMesh,
    density: &SurfaceDensity,
    x: &RVec3,
    mat: &Material,
) -> Result<CVec3> {
    let mut acc = CVec3::zeros();
    for j in 0..mesh.len() {
        let u = kupradze_tensor(x, &mesh.nodes[j], mat)?;
        acc += u * density.values[j] * Complex64::new(mesh.weights[j], 0.0);
    }
    Ok(acc)
}

/// Single-layer potential at an off-surface point.
pub fn single_layer(
    mesh: &SurfaceMesh,
    density: &SurfaceDensity,
    x: &RVec3,
    mat: &Material,
) -> Result<CVec3> {
    check_off_surface(mesh, x)?;
    single_layer_raw(mesh, density, x, mat)
}

/// Traction of the single layer, Σ_j w_j [T_ν Ups(·, y_j)](x) φ_j,
/// without the distance guard.
pub fn single_layer_traction_raw(
    mesh: &SurfaceMesh,
    density: &SurfaceDensity,
    x: &RVec3,
    normal: &RVec3,
    mat: &Material,
) -> Result<CVec3> {
    let mut acc = CVec3::zeros();
    for j in 0..mesh.len() {
        let t = kupradze_traction(x, normal, &mesh.nodes[j], mat)?;
        acc += t * density.values[j] * Complex64::new(mesh.weights[j], 0.0);
    }
    Ok(acc)
}

/// Traction of the single layer at an off-surface point.
pub fn single_layer_traction(
    mesh: &SurfaceMesh,
    density: &SurfaceDensity,
    x: &RVec3,
    normal: &RVec3,
    mat: &Material,
) -> Result<CVec3> {
    check_off_surface(mesh, x)?;
    single_layer_traction_raw(mesh, density, x, normal, mat)
}

/// Two-sided traction jump estimate at a mesh node.
///
/// Evaluates T_ν V(φ) at node ± h ν for each offset, extrapolates each side
/// to h -> 0 by Richardson on the two smallest offsets (first-order model),
/// and returns exterior minus interior. As the mesh refines this converges
/// to φ(node).
pub fn jump_estimate(
    mesh: &SurfaceMesh,
    density: &SurfaceDensity,
    node: usize,
    offsets: &[f64],
    mat: &Material,
) -> Result<CVec3> {
    assert!(
        offsets.len() >= 2,
        "need at least two offsets for extrapolation"
    );
    let mut hs = offsets.to_vec();
    hs.sort_by(|a, b| b.total_cmp(a));
    let x0 = mesh.nodes[node];
    let nu = mesh.normals[node];
    let side = |sign: f64| -> Result<CVec3> {
        let n = hs.len();
        let (h1, h2) = (hs[n - 2], hs[n - 1]); // h1 > h2, the two smallest
        let f1 = single_layer_traction_raw(mesh, density, &(x0 + nu * (sign * h1)), &nu, mat)?;
        let f2 = single_layer_traction_raw(mesh, density, &(x0 + nu * (sign * h2)), &nu, mat)?;
        // linear extrapolation to h = 0: (h1 f(h2) - h2 f(h1)) / (h1 - h2)
        Ok((f2 * Complex64::new(h1, 0.0) - f1 * Complex64::new(h2, 0.0))
            * Complex64::new(1.0 / (h1 - h2), 0.0))
    };
    let exterior = side(1.0)?;
    let interior = side(-1.0)?;
    Ok(exterior - interior)
}
