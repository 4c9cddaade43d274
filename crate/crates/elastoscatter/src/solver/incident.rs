//! Incident fields: plane waves and exterior point sources (columns of the
//! fundamental tensor applied to a fixed polarization).

use serde::{Deserialize, Serialize};

use crate::elasto::{
    complexify, kupradze_tensor, kupradze_traction, plane_wave_field, plane_wave_jacobian,
    traction, CVec3, Material, PlaneWave, RVec3,
};
use crate::geometry::{ObstacleShape, PointClass};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IncidentField {
    Plane { wave: PlaneWave },
    PointSource { location: RVec3, polarization: RVec3 },
}

impl IncidentField {
    pub fn plane(wave: PlaneWave) -> Self {
        IncidentField::Plane { wave }
    }

    pub fn point_source(location: RVec3, polarization: RVec3) -> Self {
        IncidentField::PointSource {
            location,
            polarization,
        }
    }

    /// Point sources must sit strictly outside the obstacle.
    pub fn validate(&self, shape: &ObstacleShape) -> Result<()> {
        if let IncidentField::PointSource { location, .. } = self {
            if shape.classify(location) != PointClass::Exterior {
                return Err(Error::Geometry(
                    "point-source location must be strictly exterior to the obstacle".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn field(&self, x: &RVec3, mat: &Material) -> Result<CVec3> {
        match self {
            IncidentField::Plane { wave } => Ok(plane_wave_field(x, wave, mat)),
            IncidentField::PointSource {
                location,
                polarization,
            } => Ok(kupradze_tensor(x, location, mat)? * complexify(polarization)),
        }
    }

    pub fn traction(&self, x: &RVec3, normal: &RVec3, mat: &Material) -> Result<CVec3> {
        match self {
            IncidentField::Plane { wave } => {
                Ok(traction(mat, normal, &plane_wave_jacobian(x, wave, mat)))
            }
            IncidentField::PointSource {
                location,
                polarization,
            } => Ok(kupradze_traction(x, normal, location, mat)? * complexify(polarization)),
        }
    }

    /// Whether the incident data is identically zero (zero polarization).
    pub fn is_zero(&self) -> bool {
        match self {
            IncidentField::Plane { wave } => wave.polarization.norm() == 0.0,
            IncidentField::PointSource { polarization, .. } => polarization.norm() == 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elasto::column_vec;
    use nalgebra::Vector3;

    #[test]
    fn point_source_must_be_exterior() {
        let shape = ObstacleShape::Sphere {
            radius: 1.0,
            center: [0.0; 3],
        };
        let inside = IncidentField::point_source(Vector3::new(0.2, 0.0, 0.0), Vector3::x());
        assert!(inside.validate(&shape).is_err());
        let outside = IncidentField::point_source(Vector3::new(0.0, 3.0, 0.0), Vector3::x());
        assert!(outside.validate(&shape).is_ok());
    }

    #[test]
    fn point_source_traction_consistent_with_field() {
        let mat = Material::new(2.0, 1.0, 2.0).unwrap();
        let y = Vector3::new(0.0, 0.0, 4.0);
        let eta = Vector3::new(1.0, -0.5, 0.25);
        let inc = IncidentField::point_source(y, eta);
        let x = Vector3::new(0.3, 0.8, -0.6);
        let nu = Vector3::new(1.0, 1.0, 1.0).normalize();
        let t = inc.traction(&x, &nu, &mat).unwrap();
        let field = |p: &RVec3| inc.field(p, &mat).unwrap();
        let jac = crate::elasto::fd_jacobian(&field, &x, 1e-6);
        let fd = traction(&mat, &nu, &jac);
        assert!((t - fd).norm() < 1e-6 * t.norm());
    }

    #[test]
    fn column_vec_matches_matrix_product() {
        let mat = Material::new(2.0, 1.0, 2.0).unwrap();
        let y = Vector3::new(0.0, 0.0, 2.0);
        let x = Vector3::new(0.5, -0.3, 0.1);
        let u = kupradze_tensor(&x, &y, &mat).unwrap();
        for j in 0..3 {
            let mut e = Vector3::zeros();
            e[j] = 1.0;
            let via_product = u * complexify(&e);
            assert!((via_product - column_vec(&u, j)).norm() < 1e-15);
        }
    }
}
