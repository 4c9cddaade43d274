//! Spherical-harmonic mode analysis of radiating fields.
//!
//! The mode coefficients a_nm(r) = ∫_{S²} u(r x̂) conj(Y_n^m(x̂)) ds(x̂) of a
//! Helmholtz solution solve the spherical Bessel equation in r, so each is a
//! combination β h_n^{(1)}(κ r) + γ h_n^{(2)}(κ r); an outgoing field has all
//! γ at the fit-noise level. The pressure/shear parts are separated first and
//! fit against their own wave numbers.

use num_complex::Complex64;

use crate::elasto::{CVec3, Material, RVec3};
use crate::solver::helmholtz_split;
use crate::special::{sph_hankel1, sph_hankel2, sph_harmonics_upto, SphereQuadrature};
use crate::{Error, Result};

/// Fitted outgoing/incoming amplitudes of one (n, m) mode, componentwise.
#[derive(Debug, Clone)]
pub struct ModeFit {
    pub n: usize,
    pub m: i64,
    pub beta: CVec3,
    pub gamma: CVec3,
}

/// Mode fits of the pressure and shear branches.
#[derive(Debug, Clone)]
pub struct RellichReport {
    pub p_modes: Vec<ModeFit>,
    pub s_modes: Vec<ModeFit>,
}

impl RellichReport {
    /// max |γ|/|β| over modes whose |β| clears the noise floor
    /// (noise_rel times the largest |β| in the branch).
    pub fn outgoing_purity(&self, noise_rel: f64) -> f64 {
        let mut worst = 0.0f64;
        for branch in [&self.p_modes, &self.s_modes] {
            let beta_max = branch.iter().map(|f| f.beta.norm()).fold(0.0, f64::max);
            if beta_max == 0.0 {
                continue;
            }
            for fit in branch.iter() {
                if fit.beta.norm() >= noise_rel * beta_max {
                    worst = worst.max(fit.gamma.norm() / fit.beta.norm());
                }
            }
        }
        worst
    }

    pub fn max_beta(&self) -> f64 {
        self.p_modes
            .iter()
            .chain(&self.s_modes)
            .map(|f| f.beta.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_gamma(&self) -> f64 {
        self.p_modes
            .iter()
            .chain(&self.s_modes)
            .map(|f| f.gamma.norm())
            .fold(0.0, f64::max)
    }
}

/// Vector mode coefficients of a field on the sphere of the given radius,
/// for all modes through degree n_max (flat (n, m) layout).
pub fn sphere_mode_coefficients<F>(
    field: &F,
    radius: f64,
    n_max: usize,
    quad: &SphereQuadrature,
) -> Result<Vec<CVec3>>
where
    F: ?Sized + Fn(&RVec3) -> Result<CVec3>,
{
    let dim = (n_max + 1) * (n_max + 1);
    let mut coeffs = vec![CVec3::zeros(); dim];
    for node in quad.nodes() {
        let u = field(&(node.dir * radius))?;
        let ys = sph_harmonics_upto(n_max, node.theta, node.phi);
        for (c, y) in coeffs.iter_mut().zip(&ys) {
            *c += u * (y.conj() * node.weight);
        }
    }
    Ok(coeffs)
}

/// Least-squares fit of per-radius mode coefficients against the two-Hankel
/// model a(r) = β h_n^{(1)}(κ r) + γ h_n^{(2)}(κ r), one fit per mode with
/// the three vector components sharing the design matrix.
pub fn fit_hankel_modes(
    radii: &[f64],
    coeffs_per_radius: &[Vec<CVec3>],
    kappa: f64,
    n_max: usize,
) -> Result<Vec<ModeFit>> {
    if radii.len() < 2 {
        return Err(Error::FitFailure("need at least two radii".into()));
    }
    if coeffs_per_radius.len() != radii.len() {
        return Err(Error::FitFailure("coefficient rows do not match radii".into()));
    }
    let mut fits = Vec::new();
    for n in 0..=n_max {
        // design columns depend only on the degree
        let c1: Vec<Complex64> = radii
            .iter()
            .map(|&r| sph_hankel1(n, kappa * r))
            .collect::<Result<_>>()?;
        let c2: Vec<Complex64> = radii
            .iter()
            .map(|&r| sph_hankel2(n, kappa * r))
            .collect::<Result<_>>()?;
        let herm = |a: &[Complex64], b: &[Complex64]| -> Complex64 {
            a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
        };
        let g11 = herm(&c1, &c1);
        let g12 = herm(&c1, &c2);
        let g21 = herm(&c2, &c1);
        let g22 = herm(&c2, &c2);
        let det = g11 * g22 - g12 * g21;
        if det.norm() < 1e-14 * (g11.norm() * g22.norm()).max(1e-300) {
            return Err(Error::FitFailure(format!(
                "hankel design matrix is singular at degree {n}"
            )));
        }
        for m in -(n as i64)..=(n as i64) {
            let idx = crate::special::mode_flat_index(n, m);
            let mut beta = CVec3::zeros();
            let mut gamma = CVec3::zeros();
            for comp in 0..3 {
                let data: Vec<Complex64> = coeffs_per_radius
                    .iter()
                    .map(|row| row[idx][comp])
                    .collect();
                let r1 = herm(&c1, &data);
                let r2 = herm(&c2, &data);
                beta[comp] = (r1 * g22 - r2 * g12) / det;
                gamma[comp] = (g11 * r2 - g21 * r1) / det;
            }
            fits.push(ModeFit { n, m, beta, gamma });
        }
    }
    Ok(fits)
}

/// Full mode analysis of a radiating field: split into pressure and shear
/// parts at every sample point, extract mode coefficients per radius, and fit
/// each branch against its own wave number.
pub fn rellich_modes<F>(
    field: &F,
    radii: &[f64],
    n_max: usize,
    mat: &Material,
    split_step: f64,
) -> Result<RellichReport>
where
    F: Fn(&RVec3) -> Result<CVec3>,
{
    if radii.len() < 4 {
        return Err(Error::FitFailure(
            "mode analysis needs at least four radii".into(),
        ));
    }
    let quad = SphereQuadrature::new(2 * (n_max + 1), 4 * (n_max + 1) + 1);
    let infallible = |p: &RVec3| field(p).expect("field evaluation failed");
    let p_field =
        |x: &RVec3| -> Result<CVec3> { Ok(helmholtz_split(&infallible, x, mat, split_step)?.0) };
    let s_field =
        |x: &RVec3| -> Result<CVec3> { Ok(helmholtz_split(&infallible, x, mat, split_step)?.1) };
    let mut p_rows = Vec::with_capacity(radii.len());
    let mut s_rows = Vec::with_capacity(radii.len());
    for &r in radii {
        p_rows.push(sphere_mode_coefficients(&p_field, r, n_max, &quad)?);
        s_rows.push(sphere_mode_coefficients(&s_field, r, n_max, &quad)?);
    }
    Ok(RellichReport {
        p_modes: fit_hankel_modes(radii, &p_rows, mat.kappa_p(), n_max)?,
        s_modes: fit_hankel_modes(radii, &s_rows, mat.kappa_s(), n_max)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::mode_flat_index;

    fn mat() -> Material {
        Material::new(2.0, 1.0, 2.0).unwrap()
    }

    #[test]
    fn outgoing_monopole_is_recovered() {
        // u(x) = h_0^{(1)}(κ_s |x|) e_1: a pure outgoing s-branch field for
        // the mode extractor (it solves the κ_s Helmholtz equation exactly)
        let m = mat();
        let ks = m.kappa_s();
        let field = |x: &RVec3| -> Result<CVec3> {
            let h = sph_hankel1(0, ks * x.norm())?;
            Ok(CVec3::new(h, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)))
        };
        let radii = [10.0, 18.0, 33.0, 60.0];
        let quad = SphereQuadrature::new(8, 17);
        let rows: Vec<Vec<CVec3>> = radii
            .iter()
            .map(|&r| sphere_mode_coefficients(&field, r, 3, &quad).unwrap())
            .collect();
        let fits = fit_hankel_modes(&radii, &rows, ks, 3).unwrap();
        let mono = &fits[mode_flat_index(0, 0)];
        // a_00(r) = h(κr) ∫ conj(Y_0^0) ds = h(κr) sqrt(4π)
        let sqrt4pi = (4.0 * std::f64::consts::PI).sqrt();
        assert!(
            (mono.beta[0] - Complex64::new(sqrt4pi, 0.0)).norm() < 1e-8 * sqrt4pi,
            "beta {} want {}",
            mono.beta[0],
            sqrt4pi
        );
        assert!(mono.gamma.norm() < 1e-10);
        // other modes and components stay at noise level
        for fit in &fits {
            if fit.n == 0 && fit.m == 0 {
                continue;
            }
            assert!(fit.beta.norm() < 1e-10 && fit.gamma.norm() < 1e-10);
        }
    }

    #[test]
    fn incoming_monopole_lands_in_gamma() {
        let m = mat();
        let ks = m.kappa_s();
        let field = |x: &RVec3| -> Result<CVec3> {
            let h = sph_hankel2(0, ks * x.norm())?;
            Ok(CVec3::new(h, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)))
        };
        let radii = [10.0, 18.0, 33.0, 60.0];
        let quad = SphereQuadrature::new(8, 17);
        let rows: Vec<Vec<CVec3>> = radii
            .iter()
            .map(|&r| sphere_mode_coefficients(&field, r, 2, &quad).unwrap())
            .collect();
        let fits = fit_hankel_modes(&radii, &rows, ks, 2).unwrap();
        let mono = &fits[mode_flat_index(0, 0)];
        let sqrt4pi = (4.0 * std::f64::consts::PI).sqrt();
        assert!((mono.gamma[0] - Complex64::new(sqrt4pi, 0.0)).norm() < 1e-8 * sqrt4pi);
        assert!(mono.beta.norm() < 1e-10);
    }

    #[test]
    fn zero_field_gives_zero_coefficients() {
        let m = mat();
        let field = |_: &RVec3| -> Result<CVec3> { Ok(CVec3::zeros()) };
        let report = rellich_modes(&field, &[10.0, 20.0, 40.0, 80.0], 2, &m, 1e-2).unwrap();
        assert!(report.max_beta() == 0.0);
        assert!(report.max_gamma() == 0.0);
    }

    #[test]
    fn too_few_radii_is_an_error() {
        let m = mat();
        let field = |_: &RVec3| -> Result<CVec3> { Ok(CVec3::zeros()) };
        assert!(rellich_modes(&field, &[10.0, 20.0, 40.0], 2, &m, 1e-2).is_err());
    }

    #[test]
    fn higher_mode_with_phase_is_recovered() {
        // u = h_2^{(1)}(κ r) Y_2^1(x̂) in component 2, plus an incoming
        // h_1^{(2)} Y_1^{-1} in component 0
        let m = mat();
        let kp = m.kappa_p();
        let field = |x: &RVec3| -> Result<CVec3> {
            let r = x.norm();
            let theta = (x[2] / r).clamp(-1.0, 1.0).acos();
            let phi = x[1].atan2(x[0]);
            let ys = sph_harmonics_upto(2, theta, phi);
            let out = sph_hankel1(2, kp * r)? * ys[mode_flat_index(2, 1)];
            let inc = sph_hankel2(1, kp * r)? * ys[mode_flat_index(1, -1)];
            Ok(CVec3::new(inc, Complex64::new(0.0, 0.0), out))
        };
        let radii = [9.0, 14.0, 23.0, 37.0, 55.0];
        let quad = SphereQuadrature::new(10, 21);
        let rows: Vec<Vec<CVec3>> = radii
            .iter()
            .map(|&r| sphere_mode_coefficients(&field, r, 2, &quad).unwrap())
            .collect();
        let fits = fit_hankel_modes(&radii, &rows, kp, 2).unwrap();
        let out_fit = &fits[mode_flat_index(2, 1)];
        assert!((out_fit.beta[2] - Complex64::new(1.0, 0.0)).norm() < 1e-8);
        assert!(out_fit.gamma[2].norm() < 1e-8);
        let in_fit = &fits[mode_flat_index(1, -1)];
        assert!((in_fit.gamma[0] - Complex64::new(1.0, 0.0)).norm() < 1e-8);
        assert!(in_fit.beta[0].norm() < 1e-8);
    }
}
