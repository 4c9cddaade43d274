//! Representation-formula evaluator built on the fundamental tensor.
//!
//! For a radiating solution u with boundary traces (u, T_ν u),
//!
//! ```text
//! ∫_{∂D} [ (T_{ν(y)} Ups(x, y))ᵀ u(y) - Ups(x, y) T_{ν(y)} u(y) ] ds(y)
//! ```
//!
//! reproduces u(x) at exterior points. Applied to the traces of an entire
//! solution over a closed surface W it yields -u(x) inside W and 0 outside.

use num_complex::Complex64;

use super::layer::SurfaceDensity;
use crate::elasto::{kupradze_tensor, kupradze_traction, CVec3, Material, RVec3};
use crate::geometry::SurfaceMesh;
use crate::Result;

/// Evaluate the representation integral at x from boundary traces sampled at
/// the mesh nodes. The traction of the tensor acts in its surface variable,
/// which by argument-swap symmetry is the same closed form as at x.
pub fn betti_representation(
    mesh: &SurfaceMesh,
    trace_u: &SurfaceDensity,
    trace_tu: &SurfaceDensity,
    x: &RVec3,
    mat: &Material,
) -> Result<CVec3> {
    let mut acc = CVec3::zeros();
    for j in 0..mesh.len() {
        let y = mesh.nodes[j];
        let w = Complex64::new(mesh.weights[j], 0.0);
        // T_{ν(y)} [y -> Ups(x, y)] = T_{ν(y)} [y -> Ups(y, x)]
        let t = kupradze_traction(&y, &mesh.normals[j], x, mat)?;
        let u = kupradze_tensor(x, &y, mat)?;
        acc += (t.transpose() * trace_u.values()[j] - u * trace_tu.values()[j]) * w;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elasto::{plane_full_wave, plane_wave_jacobian, traction, PlaneWave, WaveKind};
    use crate::geometry::{build_mesh, ObstacleShape};
    use nalgebra::Vector3;

    #[test]
    fn zero_traces_give_zero() {
        let shape = ObstacleShape::Sphere {
            radius: 1.0,
            center: [0.0; 3],
        };
        let mesh = build_mesh(&shape, 8, 16).unwrap();
        let mat = Material::new(2.0, 1.0, 2.0).unwrap();
        let zero = SurfaceDensity::zero(&mesh);
        let v =
            betti_representation(&mesh, &zero, &zero, &Vector3::new(0.0, 0.0, 3.0), &mat).unwrap();
        assert!(v.norm() == 0.0);
    }

    #[test]
    fn entire_solution_representation_dichotomy() {
        // traces of a plane wave over a bounding sphere: the representation
        // integral returns -u(x) inside and 0 outside
        let shape = ObstacleShape::Sphere {
            radius: 1.5,
            center: [0.0; 3],
        };
        let mesh = build_mesh(&shape, 28, 56).unwrap();
        let mat = Material::new(2.0, 1.0, 2.0).unwrap();
        let wave = PlaneWave::new(
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(1.0, 0.0, 1.0),
            WaveKind::Full,
        )
        .unwrap();
        let trace_u = SurfaceDensity::from_fn(&mesh, |p, _| plane_full_wave(p, &wave, &mat));
        let trace_tu = SurfaceDensity::from_fn(&mesh, |p, nu| {
            traction(&mat, nu, &plane_wave_jacobian(p, &wave, &mat))
        });

        let x_out = Vector3::new(0.0, 0.0, 2.4);
        let outside = betti_representation(&mesh, &trace_u, &trace_tu, &x_out, &mat).unwrap();
        let scale = plane_full_wave(&x_out, &wave, &mat).norm();
        assert!(outside.norm() < 1e-3 * scale, "{}", outside.norm() / scale);

        let x_in = Vector3::new(0.3, -0.2, 0.4);
        let inside = betti_representation(&mesh, &trace_u, &trace_tu, &x_in, &mat).unwrap();
        let want = -plane_full_wave(&x_in, &wave, &mat);
        assert!(
            (inside - want).norm() < 1e-6 * want.norm(),
            "{}",
            (inside - want).norm() / want.norm()
        );
    }

    #[test]
    fn betti_identity_for_two_entire_solutions() {
        // ∮ (u · T_ν v - v · T_ν u) ds = 0 for two plane waves of the same
        // material over a closed surface
        let shape = ObstacleShape::Sphere {
            radius: 1.0,
            center: [0.1, 0.0, -0.2],
        };
        let mesh = build_mesh(&shape, 20, 40).unwrap();
        let mat = Material::new(2.0, 1.0, 2.0).unwrap();
        let w1 = PlaneWave::new(
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(1.0, 0.5, 1.0),
            WaveKind::Full,
        )
        .unwrap();
        let w2 = PlaneWave::new(
            Vector3::new(1.0, 2.0, 2.0).normalize(),
            Vector3::new(0.0, 1.0, -1.0),
            WaveKind::Full,
        )
        .unwrap();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut scale = 0.0f64;
        for j in 0..mesh.len() {
            let p = &mesh.nodes[j];
            let nu = &mesh.normals[j];
            let u = plane_full_wave(p, &w1, &mat);
            let v = plane_full_wave(p, &w2, &mat);
            let tu = traction(&mat, nu, &plane_wave_jacobian(p, &w1, &mat));
            let tv = traction(&mat, nu, &plane_wave_jacobian(p, &w2, &mat));
            // bilinear pairing, no conjugation
            let term = u.dot(&tv) - v.dot(&tu);
            acc += term * mesh.weights[j];
            scale = scale.max(u.norm() * tv.norm());
        }
        assert!(
            acc.norm() < 1e-8 * scale * mesh.area(),
            "betti defect {}",
            acc.norm() / (scale * mesh.area())
        );
    }
}
