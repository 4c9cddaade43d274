//! Star-shaped obstacle boundaries: sphere, ellipsoid and spherical-harmonic
//! perturbed stars.
//!
//! Every shape is described in polar form about its center,
//! p(θ, φ) = center + ρ(θ, φ) ŝ(θ, φ), with an analytic radius function ρ and
//! its angular derivatives. For the ellipsoid the polar radius is
//! ρ = ((sθ cφ/a)² + (sθ sφ/b)² + (cθ/c)²)^{-1/2}.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::elasto::RVec3;
use crate::special::real_sph_harmonic;
use crate::{Error, Result};

/// Width of the near-boundary classification band, relative to the diameter.
const NEAR_BOUNDARY_RELATIVE: f64 = 1e-6;

/// A closed C² star-shaped boundary.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ObstacleShape {
    Sphere {
        radius: f64,
        center: [f64; 3],
    },
    Ellipsoid {
        semi_axes: [f64; 3],
        center: [f64; 3],
    },
    /// Radius function ρ(θ, φ) = Σ c_k R_{n_k}^{m_k}(θ, φ) over real
    /// orthonormal spherical harmonics; must stay strictly positive.
    Star {
        coefficients: Vec<StarCoefficient>,
        center: [f64; 3],
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StarCoefficient {
    pub n: usize,
    pub m: i64,
    pub c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    Interior,
    Exterior,
    NearBoundary,
}

impl ObstacleShape {
    pub fn center(&self) -> RVec3 {
        let c = match self {
            ObstacleShape::Sphere { center, .. } => center,
            ObstacleShape::Ellipsoid { center, .. } => center,
            ObstacleShape::Star { center, .. } => center,
        };
        Vector3::new(c[0], c[1], c[2])
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ObstacleShape::Sphere { radius, .. } => {
                if !(*radius > 0.0) {
                    return Err(Error::InvalidShape(format!(
                        "sphere radius must be positive, got {radius}"
                    )));
                }
            }
            ObstacleShape::Ellipsoid { semi_axes, .. } => {
                if semi_axes.iter().any(|a| !(*a > 0.0)) {
                    return Err(Error::InvalidShape(format!(
                        "ellipsoid semi-axes must be positive, got {semi_axes:?}"
                    )));
                }
            }
            ObstacleShape::Star { coefficients, .. } => {
                if coefficients.is_empty() {
                    return Err(Error::InvalidShape(
                        "star shape needs at least one coefficient".into(),
                    ));
                }
                for sc in coefficients {
                    if sc.m.unsigned_abs() as usize > sc.n {
                        return Err(Error::InvalidShape(format!(
                            "star coefficient has |m| = {} > n = {}",
                            sc.m, sc.n
                        )));
                    }
                }
                // probe positivity on a moderate grid so invalid shapes fail
                // early; build_mesh re-checks on its own grid
                for i in 0..24 {
                    let theta = std::f64::consts::PI * (i as f64 + 0.5) / 24.0;
                    for j in 0..48 {
                        let phi = 2.0 * std::f64::consts::PI * j as f64 / 48.0;
                        if self.radial(theta, phi).0 <= 0.0 {
                            return Err(Error::InvalidShape(format!(
                                "star radius not positive at theta={theta:.3}, phi={phi:.3}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Polar radius and its angular derivatives: (ρ, ∂ρ/∂θ, ∂ρ/∂φ).
    pub fn radial(&self, theta: f64, phi: f64) -> (f64, f64, f64) {
        match self {
            ObstacleShape::Sphere { radius, .. } => (*radius, 0.0, 0.0),
            ObstacleShape::Ellipsoid { semi_axes, .. } => {
                let (st, ct) = (theta.sin(), theta.cos());
                let (sp, cp) = (phi.sin(), phi.cos());
                let a2 = 1.0 / (semi_axes[0] * semi_axes[0]);
                let b2 = 1.0 / (semi_axes[1] * semi_axes[1]);
                let c2 = 1.0 / (semi_axes[2] * semi_axes[2]);
                let g = st * st * (a2 * cp * cp + b2 * sp * sp) + c2 * ct * ct;
                let dg_dt = 2.0 * st * ct * (a2 * cp * cp + b2 * sp * sp - c2);
                let dg_dp = 2.0 * st * st * sp * cp * (b2 - a2);
                let rho = g.powf(-0.5);
                let f = -0.5 * g.powf(-1.5);
                (rho, f * dg_dt, f * dg_dp)
            }
            ObstacleShape::Star { coefficients, .. } => {
                let mut rho = 0.0;
                let mut dt = 0.0;
                let mut dp = 0.0;
                for sc in coefficients {
                    let (v, vdt, vdp) = real_sph_harmonic(sc.n, sc.m, theta, phi);
                    rho += sc.c * v;
                    dt += sc.c * vdt;
                    dp += sc.c * vdp;
                }
                (rho, dt, dp)
            }
        }
    }

    /// Surface point at (θ, φ).
    pub fn point(&self, theta: f64, phi: f64) -> RVec3 {
        let (st, ct) = (theta.sin(), theta.cos());
        let (sp, cp) = (phi.sin(), phi.cos());
        let (rho, _, _) = self.radial(theta, phi);
        self.center() + Vector3::new(rho * st * cp, rho * st * sp, rho * ct)
    }

    /// Parametric tangents (∂p/∂θ, ∂p/∂φ) at (θ, φ).
    pub fn tangents(&self, theta: f64, phi: f64) -> (RVec3, RVec3) {
        let (st, ct) = (theta.sin(), theta.cos());
        let (sp, cp) = (phi.sin(), phi.cos());
        let (rho, drt, drp) = self.radial(theta, phi);
        let s_hat = Vector3::new(st * cp, st * sp, ct);
        let s_dt = Vector3::new(ct * cp, ct * sp, -st);
        let s_dp = Vector3::new(-st * sp, st * cp, 0.0);
        (s_hat * drt + s_dt * rho, s_hat * drp + s_dp * rho)
    }

    /// Radius of the smallest center-based bounding sphere.
    pub fn bounding_radius(&self) -> f64 {
        match self {
            ObstacleShape::Sphere { radius, .. } => *radius,
            ObstacleShape::Ellipsoid { semi_axes, .. } => {
                semi_axes.iter().cloned().fold(0.0, f64::max)
            }
            ObstacleShape::Star { .. } => {
                let mut r_max: f64 = 0.0;
                for i in 0..64 {
                    let theta = std::f64::consts::PI * (i as f64 + 0.5) / 64.0;
                    for j in 0..128 {
                        let phi = 2.0 * std::f64::consts::PI * j as f64 / 128.0;
                        r_max = r_max.max(self.radial(theta, phi).0);
                    }
                }
                r_max
            }
        }
    }

    /// Obstacle diameter scale used for the near-boundary band.
    pub fn diameter(&self) -> f64 {
        2.0 * self.bounding_radius()
    }

    /// |x - center| minus the surface radius along the same direction;
    /// negative inside, positive outside.
    pub fn signed_radial_distance(&self, x: &RVec3) -> f64 {
        let d = x - self.center();
        let r = d.norm();
        if r == 0.0 {
            return -self.radial(0.5 * std::f64::consts::PI, 0.0).0;
        }
        let theta = (d[2] / r).clamp(-1.0, 1.0).acos();
        let phi = d[1].atan2(d[0]);
        r - self.radial(theta, phi).0
    }

    /// Classify a point relative to the obstacle with a near-boundary band of
    /// width 1e-6 times the diameter.
    pub fn classify(&self, x: &RVec3) -> PointClass {
        let band = NEAR_BOUNDARY_RELATIVE * self.diameter();
        let sd = self.signed_radial_distance(x);
        if sd.abs() <= band {
            PointClass::NearBoundary
        } else if sd < 0.0 {
            PointClass::Interior
        } else {
            PointClass::Exterior
        }
    }
}
