//! Incident plane waves: pressure, shear and their superposition.
//!
//! The full wave is defined through curl-curl / grad-div applied to
//! e^{i kappa alpha·x} eta, which fixes the sign conventions:
//! the shear part equals (1/mu) e^{i kappa_s alpha·x} (eta - (alpha·eta) alpha).

use nalgebra::Vector3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{complexify, CMat3, CVec3, Material, RVec3};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WaveKind {
    Pressure,
    Shear,
    Full,
}

/// A plane wave travelling along `direction` with real polarization `eta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneWave {
    pub direction: RVec3,
    pub polarization: RVec3,
    pub kind: WaveKind,
}

impl PlaneWave {
    pub fn new(direction: RVec3, polarization: RVec3, kind: WaveKind) -> Result<Self> {
        if (direction.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidWave(format!(
                "direction must be a unit vector, |alpha| = {}",
                direction.norm()
            )));
        }
        Ok(Self {
            direction,
            polarization,
            kind,
        })
    }
}

/// Pressure plane wave (1/(lambda+2mu)) e^{i kappa_p alpha·x} (alpha·eta) alpha.
pub fn plane_p_wave(x: &RVec3, wave: &PlaneWave, mat: &Material) -> CVec3 {
    let alpha = wave.direction;
    let amp = alpha.dot(&wave.polarization) / (mat.lambda + 2.0 * mat.mu);
    let phase = Complex64::from_polar(1.0, mat.kappa_p() * alpha.dot(x));
    complexify(&alpha) * (phase * amp)
}

/// Shear plane wave -(1/mu) e^{i kappa_s alpha·x} alpha×(alpha×eta),
/// orthogonal to the propagation direction.
pub fn plane_s_wave(x: &RVec3, wave: &PlaneWave, mat: &Material) -> CVec3 {
    let alpha = wave.direction;
    let transverse = wave.polarization - alpha * alpha.dot(&wave.polarization);
    let phase = Complex64::from_polar(1.0, mat.kappa_s() * alpha.dot(x));
    complexify(&transverse) * (phase / mat.mu)
}

/// Full plane wave: pressure part plus shear part.
pub fn plane_full_wave(x: &RVec3, wave: &PlaneWave, mat: &Material) -> CVec3 {
    plane_p_wave(x, wave, mat) + plane_s_wave(x, wave, mat)
}

/// Evaluate the wave selected by `wave.kind`.
pub fn plane_wave_field(x: &RVec3, wave: &PlaneWave, mat: &Material) -> CVec3 {
    match wave.kind {
        WaveKind::Pressure => plane_p_wave(x, wave, mat),
        WaveKind::Shear => plane_s_wave(x, wave, mat),
        WaveKind::Full => plane_full_wave(x, wave, mat),
    }
}

/// Analytic Jacobian of the selected plane wave: for u = c e^{i kappa alpha·x} v
/// the Jacobian is i kappa c e^{i kappa alpha·x} v alphaᵀ.
pub fn plane_wave_jacobian(x: &RVec3, wave: &PlaneWave, mat: &Material) -> CMat3 {
    let alpha = wave.direction;
    let mut jac = CMat3::zeros();
    let add_part = |jac: &mut CMat3, kappa: f64, v: CVec3| {
        let factor = Complex64::new(0.0, kappa);
        for i in 0..3 {
            for k in 0..3 {
                jac[(i, k)] += factor * v[i] * alpha[k];
            }
        }
    };
    match wave.kind {
        WaveKind::Pressure => add_part(&mut jac, mat.kappa_p(), plane_p_wave(x, wave, mat)),
        WaveKind::Shear => add_part(&mut jac, mat.kappa_s(), plane_s_wave(x, wave, mat)),
        WaveKind::Full => {
            add_part(&mut jac, mat.kappa_p(), plane_p_wave(x, wave, mat));
            add_part(&mut jac, mat.kappa_s(), plane_s_wave(x, wave, mat));
        }
    }
    jac
}
