//! Experiment orchestration: verification suites, far-field emission, the
//! two-obstacle uniqueness comparison and the Green-tensor difference
//! identity.

mod diff_identity;
mod emit;
mod uniqueness;
pub mod verify;

pub use diff_identity::{cmd_difference_identity, DiffIdentityReport};
pub use emit::{cmd_farfield, parse_pattern_csv, FarFieldFiles};
pub use uniqueness::{cmd_uniqueness, UniquenessReport};

/// Least-squares slope of y against x (used for log-log decay fits).
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

/// Polar-cap direction grid: product grid restricted to θ <= cap (radians)
/// around the +z axis.
pub fn cap_directions(cap: f64, n_theta: usize, n_phi: usize) -> Vec<crate::elasto::RVec3> {
    let mut dirs = Vec::new();
    for i in 0..n_theta {
        let theta = cap * (i as f64 + 0.5) / n_theta as f64;
        for j in 0..n_phi {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64;
            dirs.push(crate::elasto::RVec3::new(
                theta.sin() * phi.cos(),
                theta.sin() * phi.sin(),
                theta.cos(),
            ));
        }
    }
    dirs
}
