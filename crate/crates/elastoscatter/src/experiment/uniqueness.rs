//! Two-obstacle far-field comparison: distinct obstacles produce far fields
//! that differ by far more than the solver error, identical ones do not.
//! Patterns are compared on a polar cap of configurable half-angle about +z,
//! a fixed solid angle of observation directions.

use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::elasto::RVec3;
use crate::farfield::farfield_from_sources;
use crate::solver::{CollocationOperator, IncidentField};
use crate::{Error, Result};

use super::cap_directions;

/// Calibration factor turning held-out boundary residuals into a far-field
/// error bound (see the refinement study in the solver tests).
const RESIDUAL_TO_PATTERN: f64 = 25.0;

#[derive(Debug, Clone, Serialize)]
pub struct UniquenessReport {
    /// sup-norm distance between the two far fields on the cap
    pub distance_sup: f64,
    /// L² distance over the cap grid
    pub distance_l2: f64,
    /// residual-based solver error bound for the distance
    pub error_bound: f64,
    /// distance_sup / error_bound
    pub separation_ratio: f64,
    pub residuals: [f64; 2],
    pub pattern_scale: f64,
    pub cap_half_angle_deg: f64,
    pub directions: usize,
}

/// Compare the far fields of the configured obstacle pair under one fixed
/// incident plane wave.
pub fn cmd_uniqueness(cfg: &ExperimentConfig) -> Result<UniquenessReport> {
    cfg.validate()?;
    if cfg.obstacles.len() != 2 {
        return Err(Error::Config(
            "uniqueness runs need exactly two obstacles".into(),
        ));
    }
    let incident = cfg.incident_field()?;
    if !matches!(incident, IncidentField::Plane { .. }) {
        return Err(Error::Config(
            "uniqueness runs need a plane incident wave".into(),
        ));
    }
    let cap = cfg.cap_half_angle_deg.to_radians();
    let dirs = cap_directions(cap, 12, 24);
    let mut patterns = Vec::new();
    let mut residuals = [0.0f64; 2];
    for (i, obs) in cfg.obstacles.iter().enumerate() {
        let op = CollocationOperator::new(&obs.shape, obs.bc, &cfg.material, &cfg.solver)?;
        let sol = op.solve(incident.clone())?;
        residuals[i] = sol.residual_report.relative;
        let (p, s) = farfield_from_sources(&sol, &dirs)?;
        let full: Vec<crate::elasto::CVec3> = p
            .values
            .iter()
            .zip(&s.values)
            .map(|(a, b)| a + b)
            .collect();
        patterns.push(full);
    }
    Ok(compare_patterns(
        &dirs,
        &patterns[0],
        &patterns[1],
        residuals,
        cfg.cap_half_angle_deg,
    ))
}

/// Distance/bound bookkeeping shared with the acceptance suite.
pub fn compare_patterns(
    dirs: &[RVec3],
    a: &[crate::elasto::CVec3],
    b: &[crate::elasto::CVec3],
    residuals: [f64; 2],
    cap_half_angle_deg: f64,
) -> UniquenessReport {
    let mut sup = 0.0f64;
    let mut l2 = 0.0f64;
    let mut scale = 0.0f64;
    for i in 0..dirs.len() {
        let d = (a[i] - b[i]).norm();
        sup = sup.max(d);
        l2 += d * d;
        scale = scale.max(a[i].norm()).max(b[i].norm());
    }
    let l2 = (l2 / dirs.len() as f64).sqrt();
    let error_bound = RESIDUAL_TO_PATTERN * (residuals[0] + residuals[1]) * scale;
    UniquenessReport {
        distance_sup: sup,
        distance_l2: l2,
        error_bound,
        separation_ratio: if error_bound > 0.0 {
            sup / error_bound
        } else {
            f64::INFINITY
        },
        residuals,
        pattern_scale: scale,
        cap_half_angle_deg,
        directions: dirs.len(),
    }
}
