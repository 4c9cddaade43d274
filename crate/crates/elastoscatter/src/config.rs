//! Experiment configuration: a single JSON document. All quantities are
//! dimensionless.

use serde::{Deserialize, Serialize};

use crate::elasto::{Material, PlaneWave, RVec3, WaveKind};
use crate::geometry::ObstacleShape;
use crate::solver::{BoundaryCondition, IncidentField, SolverParams};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub material: Material,
    pub obstacles: Vec<ObstacleConfig>,
    pub incident: IncidentConfig,
    pub solver: SolverParams,
    #[serde(default)]
    pub outputs: OutputConfig,
    /// far-field direction grid (θ × φ product)
    #[serde(default = "default_directions")]
    pub directions: DirectionGrid,
    /// polar-cap half angle for the solid-angle comparison, degrees
    #[serde(default = "default_cap")]
    pub cap_half_angle_deg: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObstacleConfig {
    pub shape: ObstacleShape,
    pub bc: BoundaryCondition,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, tag = "kind", rename_all = "snake_case")]
pub enum IncidentConfig {
    Plane {
        alpha: [f64; 3],
        eta: [f64; 3],
        #[serde(default = "default_wave_kind")]
        wave: WaveKind,
    },
    PointSource {
        location: [f64; 3],
        eta: [f64; 3],
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    pub directory: String,
    #[serde(default = "default_formats")]
    pub formats: Vec<String>,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            directory: "out".into(),
            formats: default_formats(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectionGrid {
    pub n_theta: usize,
    pub n_phi: usize,
}

fn default_directions() -> DirectionGrid {
    DirectionGrid {
        n_theta: 24,
        n_phi: 48,
    }
}

fn default_cap() -> f64 {
    30.0
}

fn default_wave_kind() -> WaveKind {
    WaveKind::Full
}

fn default_formats() -> Vec<String> {
    vec!["csv".into(), "json".into()]
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(format!("{e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        self.material
            .validate()
            .map_err(|e| Error::Config(format!("material: {e}")))?;
        if self.obstacles.is_empty() || self.obstacles.len() > 2 {
            return Err(Error::Config(format!(
                "obstacles: expected 1 or 2 entries, got {}",
                self.obstacles.len()
            )));
        }
        for (i, obs) in self.obstacles.iter().enumerate() {
            obs.shape
                .validate()
                .map_err(|e| Error::Config(format!("obstacles[{i}].shape: {e}")))?;
            obs.bc
                .validate()
                .map_err(|e| Error::Config(format!("obstacles[{i}].bc: {e}")))?;
        }
        if self.obstacles.len() == 2 {
            let a = &self.obstacles[0].shape;
            let b = &self.obstacles[1].shape;
            let dist = (a.center() - b.center()).norm();
            if dist <= a.bounding_radius() + b.bounding_radius() {
                return Err(Error::Config(
                    "obstacles: two-obstacle experiments need disjoint obstacles \
                     (center distance must exceed the sum of bounding radii)"
                        .into(),
                ));
            }
        }
        if let IncidentConfig::Plane { alpha, .. } = &self.incident {
            let n = (alpha[0] * alpha[0] + alpha[1] * alpha[1] + alpha[2] * alpha[2]).sqrt();
            if (n - 1.0).abs() > 1e-12 {
                return Err(Error::Config(format!(
                    "incident.alpha: must be a unit vector, |alpha| = {n}"
                )));
            }
        }
        if !(self.solver.shrink > 0.0 && self.solver.shrink < 1.0) {
            return Err(Error::Config(format!(
                "solver.shrink: must lie in (0, 1), got {}",
                self.solver.shrink
            )));
        }
        if self.solver.n_theta < 4 || self.solver.n_phi < 8 {
            return Err(Error::Config(format!(
                "solver: resolution too coarse ({} x {})",
                self.solver.n_theta, self.solver.n_phi
            )));
        }
        if !(self.cap_half_angle_deg > 0.0 && self.cap_half_angle_deg <= 180.0) {
            return Err(Error::Config(format!(
                "cap_half_angle_deg: must lie in (0, 180], got {}",
                self.cap_half_angle_deg
            )));
        }
        Ok(())
    }

    /// Build the incident field description.
    pub fn incident_field(&self) -> Result<IncidentField> {
        Ok(match &self.incident {
            IncidentConfig::Plane { alpha, eta, wave } => IncidentField::plane(PlaneWave::new(
                RVec3::new(alpha[0], alpha[1], alpha[2]),
                RVec3::new(eta[0], eta[1], eta[2]),
                *wave,
            )?),
            IncidentConfig::PointSource { location, eta } => IncidentField::point_source(
                RVec3::new(location[0], location[1], location[2]),
                RVec3::new(eta[0], eta[1], eta[2]),
            ),
        })
    }

    /// Canonical default configuration: rigid unit sphere, full plane wave.
    pub fn default_rigid_sphere() -> Self {
        ExperimentConfig {
            material: Material {
                lambda: 2.0,
                mu: 1.0,
                omega: 2.0,
            },
            obstacles: vec![ObstacleConfig {
                shape: ObstacleShape::Sphere {
                    radius: 1.0,
                    center: [0.0; 3],
                },
                bc: BoundaryCondition::Dirichlet,
            }],
            incident: IncidentConfig::Plane {
                alpha: [0.0, 0.0, 1.0],
                eta: [0.0, 0.0, 1.0],
                wave: WaveKind::Full,
            },
            solver: SolverParams::default(),
            outputs: OutputConfig::default(),
            directions: default_directions(),
            cap_half_angle_deg: default_cap(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_round_trips() {
        let cfg = ExperimentConfig::default_rigid_sphere();
        let text = serde_json::to_string_pretty(&cfg).unwrap();
        let back = ExperimentConfig::from_json(&text).unwrap();
        assert_eq!(back.material.omega, 2.0);
        assert_eq!(back.obstacles.len(), 1);
    }

    #[test]
    fn malformed_config_names_the_field() {
        let mut cfg = ExperimentConfig::default_rigid_sphere();
        cfg.material.mu = -1.0;
        let text = serde_json::to_string(&cfg).unwrap();
        let err = ExperimentConfig::from_json(&text).unwrap_err();
        assert!(format!("{err}").contains("material"));

        let mut cfg = ExperimentConfig::default_rigid_sphere();
        cfg.solver.shrink = 1.5;
        let text = serde_json::to_string(&cfg).unwrap();
        let err = ExperimentConfig::from_json(&text).unwrap_err();
        assert!(format!("{err}").contains("shrink"));
    }

    #[test]
    fn overlapping_obstacles_are_rejected() {
        let mut cfg = ExperimentConfig::default_rigid_sphere();
        cfg.obstacles.push(cfg.obstacles[0].clone());
        let text = serde_json::to_string(&cfg).unwrap();
        let err = ExperimentConfig::from_json(&text).unwrap_err();
        assert!(format!("{err}").contains("disjoint"));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"material": {"lambda": 2.0, "mu": 1.0, "omega": 2.0}, "bogus": 1}"#;
        assert!(ExperimentConfig::from_json(text).is_err());
    }
}
