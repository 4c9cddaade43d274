//! Pressure/shear decomposition of a smooth field through the Helmholtz
//! operator identities
//!
//! ```text
//! u_p = (Δ + κ_s²) u / (κ_s² - κ_p²),   u_s = (Δ + κ_p²) u / (κ_p² - κ_s²),
//! ```
//!
//! with the Laplacian taken by fourth-order central differences. The two
//! parts sum to u exactly (the discrete Laplacians cancel).

use num_complex::Complex64;

use crate::elasto::{CVec3, Material, RVec3};
use crate::{Error, Result};

/// FD Laplacian, 5-point fourth-order stencil per axis.
fn fd_laplacian<F>(field: &F, x: &RVec3, h: f64) -> CVec3
where
    F: Fn(&RVec3) -> CVec3,
{
    let center = field(x);
    let mut acc = -center * Complex64::new(90.0, 0.0); // 3 × (-30)
    for k in 0..3 {
        let mut e = RVec3::zeros();
        e[k] = h;
        acc += (field(&(x + e)) + field(&(x - e))) * Complex64::new(16.0, 0.0);
        acc -= field(&(x + e * 2.0)) + field(&(x - e * 2.0));
    }
    acc * Complex64::new(1.0 / (12.0 * h * h), 0.0)
}

/// Split u(x) into its pressure and shear parts (u_p, u_s).
pub fn helmholtz_split<F>(field: &F, x: &RVec3, mat: &Material, h: f64) -> Result<(CVec3, CVec3)>
where
    F: Fn(&RVec3) -> CVec3,
{
    let (kp, ks) = mat.wave_numbers();
    let denom = ks * ks - kp * kp;
    if denom.abs() < 1e-14 * (ks * ks + kp * kp) {
        return Err(Error::DegenerateMaterial);
    }
    let u = field(x);
    let lap = fd_laplacian(field, x, h);
    let u_p = (lap + u * Complex64::new(ks * ks, 0.0)) * Complex64::new(1.0 / denom, 0.0);
    let u_s = (lap + u * Complex64::new(kp * kp, 0.0)) * Complex64::new(-1.0 / denom, 0.0);
    Ok((u_p, u_s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elasto::{plane_p_wave, plane_s_wave, PlaneWave, WaveKind};
    use nalgebra::Vector3;

    fn mat() -> Material {
        Material::new(2.0, 1.0, 2.0).unwrap()
    }

    #[test]
    fn pure_pressure_wave_has_no_shear_part() {
        let m = mat();
        let w = PlaneWave::new(
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(0.3, 0.0, 1.0),
            WaveKind::Pressure,
        )
        .unwrap();
        let x = Vector3::new(0.2, -0.4, 0.7);
        let field = |p: &RVec3| plane_p_wave(p, &w, &m);
        let (u_p, u_s) = helmholtz_split(&field, &x, &m, 1e-2).unwrap();
        let scale = field(&x).norm();
        assert!(u_s.norm() < 1e-5 * scale, "shear leakage {}", u_s.norm() / scale);
        assert!((u_p - field(&x)).norm() < 1e-5 * scale);
    }

    #[test]
    fn pure_shear_wave_has_no_pressure_part() {
        let m = mat();
        let w = PlaneWave::new(
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(1.0, 0.5, 0.0),
            WaveKind::Shear,
        )
        .unwrap();
        let x = Vector3::new(-0.1, 0.3, 0.9);
        let field = |p: &RVec3| plane_s_wave(p, &w, &m);
        let (u_p, u_s) = helmholtz_split(&field, &x, &m, 1e-2).unwrap();
        let scale = field(&x).norm();
        assert!(u_p.norm() < 1e-5 * scale);
        assert!((u_s - field(&x)).norm() < 1e-5 * scale);
    }

    #[test]
    fn parts_sum_to_the_field_exactly() {
        let m = mat();
        let w = PlaneWave::new(
            Vector3::new(1.0, 2.0, 2.0).normalize(),
            Vector3::new(1.0, -1.0, 0.5),
            WaveKind::Full,
        )
        .unwrap();
        let x = Vector3::new(0.4, 0.1, -0.6);
        let field = |p: &RVec3| crate::elasto::plane_full_wave(p, &w, &m);
        let (u_p, u_s) = helmholtz_split(&field, &x, &m, 5e-2).unwrap();
        let u = field(&x);
        assert!((u_p + u_s - u).norm() < 1e-13 * u.norm());
    }

    #[test]
    fn degenerate_material_is_rejected() {
        // lambda = -mu makes the two wave numbers coincide
        let m = Material::new(-1.0, 1.0, 2.0).unwrap();
        let field = |_: &RVec3| CVec3::zeros();
        assert!(matches!(
            helmholtz_split(&field, &Vector3::zeros(), &m, 1e-2),
            Err(Error::DegenerateMaterial)
        ));
    }
}
