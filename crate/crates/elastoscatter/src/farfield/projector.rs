//! The rank-one projector A(x̂) = x̂ x̂ᵀ onto the radial direction and its
//! complement. A η = (x̂·η) x̂ picks the longitudinal part; (I - A) η the
//! tangential part, equal to -x̂×(x̂×η) by the triple-product identity.

use nalgebra::Matrix3;

use crate::elasto::RVec3;
use crate::{Error, Result};

/// A(x̂) = x̂ x̂ᵀ for a unit direction.
pub fn projector(dir: &RVec3) -> Result<Matrix3<f64>> {
    if (dir.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "projector direction must be unit, |x| = {}",
            dir.norm()
        )));
    }
    Ok(dir * dir.transpose())
}
