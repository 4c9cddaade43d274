//! Boundary conditions: rigid (Dirichlet), cavity (Neumann) and absorbing
//! (Robin with Im h >= 0).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
    Robin { h_re: f64, h_im: f64 },
}

impl BoundaryCondition {
    pub fn robin(h: Complex64) -> Result<Self> {
        let bc = BoundaryCondition::Robin {
            h_re: h.re,
            h_im: h.im,
        };
        bc.validate()?;
        Ok(bc)
    }

    pub fn validate(&self) -> Result<()> {
        if let BoundaryCondition::Robin { h_im, .. } = self {
            if *h_im < 0.0 {
                return Err(Error::Config(format!(
                    "robin impedance must have Im h >= 0, got Im h = {h_im}"
                )));
            }
        }
        Ok(())
    }

    pub fn robin_constant(&self) -> Complex64 {
        match self {
            BoundaryCondition::Robin { h_re, h_im } => Complex64::new(*h_re, *h_im),
            _ => Complex64::new(0.0, 0.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn robin_sign_constraint() {
        assert!(BoundaryCondition::robin(Complex64::new(0.0, 1.0)).is_ok());
        assert!(BoundaryCondition::robin(Complex64::new(2.0, 0.0)).is_ok());
        assert!(BoundaryCondition::robin(Complex64::new(0.0, -0.1)).is_err());
    }
}
