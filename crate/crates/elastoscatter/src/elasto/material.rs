//! Homogeneous isotropic material at a fixed angular frequency.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Lamé parameters and angular frequency; density is normalized to 1.
///
/// Valid materials satisfy mu > 0, lambda + 2 mu > 0 and omega > 0, which
/// makes both wave numbers finite and positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Material {
    pub lambda: f64,
    pub mu: f64,
    pub omega: f64,
}

impl Material {
    pub fn new(lambda: f64, mu: f64, omega: f64) -> Result<Self> {
        let m = Self { lambda, mu, omega };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu > 0.0) {
            return Err(Error::InvalidMaterial(format!("mu must be > 0, got {}", self.mu)));
        }
        if !(self.lambda + 2.0 * self.mu > 0.0) {
            return Err(Error::InvalidMaterial(format!(
                "lambda + 2 mu must be > 0, got {}",
                self.lambda + 2.0 * self.mu
            )));
        }
        if !(self.omega > 0.0) {
            return Err(Error::InvalidMaterial(format!(
                "omega must be > 0, got {}",
                self.omega
            )));
        }
        Ok(())
    }

    /// Pressure wave number kappa_p = omega / sqrt(lambda + 2 mu).
    pub fn kappa_p(&self) -> f64 {
        self.omega / (self.lambda + 2.0 * self.mu).sqrt()
    }

    /// Shear wave number kappa_s = omega / sqrt(mu).
    pub fn kappa_s(&self) -> f64 {
        self.omega / self.mu.sqrt()
    }

    /// Both wave numbers (kappa_p, kappa_s).
    pub fn wave_numbers(&self) -> (f64, f64) {
        (self.kappa_p(), self.kappa_s())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn wave_numbers_closed_form() {
        let m = Material::new(2.0, 1.0, 2.0).unwrap();
        let (kp, ks) = m.wave_numbers();
        assert_relative_eq!(kp, 1.0);
        assert_relative_eq!(ks, 2.0);

        let m = Material::new(0.0, 1.0, 1.0).unwrap();
        let (kp, ks) = m.wave_numbers();
        assert_relative_eq!(kp, 1.0 / 2.0f64.sqrt());
        assert_relative_eq!(ks, 1.0);

        let m = Material::new(1.0, 1.0, 3.0).unwrap();
        let (kp, ks) = m.wave_numbers();
        assert_relative_eq!(kp, 3.0f64.sqrt());
        assert_relative_eq!(ks, 3.0);
    }

    #[test]
    fn kappa_ordering() {
        // kappa_p < kappa_s whenever lambda > -mu
        let m = Material::new(0.5, 1.0, 2.0).unwrap();
        assert!(m.kappa_p() < m.kappa_s());
        // admissible material with lambda < -mu reverses the order
        let m = Material::new(-1.5, 1.0, 2.0).unwrap();
        assert!(m.kappa_p() > m.kappa_s());
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(Material::new(2.0, 0.0, 1.0).is_err());
        assert!(Material::new(-3.0, 1.0, 1.0).is_err());
        assert!(Material::new(2.0, 1.0, 0.0).is_err());
        assert!(Material::new(2.0, 1.0, -1.0).is_err());
    }
}
