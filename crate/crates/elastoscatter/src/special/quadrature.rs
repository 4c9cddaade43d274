//! Gauss-Legendre quadrature on [-1, 1] and the product rule on the unit
//! sphere (Gauss-Legendre in cos θ, uniform trapezoid in φ).

use nalgebra::Vector3;

/// Gauss-Legendre nodes and weights on [-1, 1], exact for polynomials of
/// degree <= 2n-1. Newton iteration on P_n with the Chebyshev initial guess.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1, "need at least one node");
    if n == 1 {
        return vec![(0.0, 2.0)];
    }
    let mut out = vec![(0.0, 0.0); n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            // P_n and P_n' by upward recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            pp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / pp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * pp * pp);
        out[i] = (-x, w);
        out[n - 1 - i] = (x, w);
    }
    if n % 2 == 1 {
        out[n / 2].0 = 0.0;
    }
    out
}

/// A single product-quadrature node on the unit sphere.
#[derive(Debug, Clone, Copy)]
pub struct SphereNode {
    pub theta: f64,
    pub phi: f64,
    pub dir: Vector3<f64>,
    pub weight: f64,
}

/// Product quadrature on S²: Gauss-Legendre in cos θ times uniform
/// trapezoid in φ. Weights sum to 4π; exactly integrates spherical-harmonic
/// products up to the node-count-implied degree.
pub struct SphereQuadrature {
    nodes: Vec<SphereNode>,
    n_theta: usize,
    n_phi: usize,
}

impl SphereQuadrature {
    pub fn new(n_theta: usize, n_phi: usize) -> Self {
        let gl = gauss_legendre(n_theta);
        let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
        let mut nodes = Vec::with_capacity(n_theta * n_phi);
        for &(t, wt) in &gl {
            let theta = t.acos();
            let s = theta.sin();
            for j in 0..n_phi {
                let phi = dphi * j as f64;
                nodes.push(SphereNode {
                    theta,
                    phi,
                    dir: Vector3::new(s * phi.cos(), s * phi.sin(), t),
                    weight: wt * dphi,
                });
            }
        }
        Self {
            nodes,
            n_theta,
            n_phi,
        }
    }

    pub fn nodes(&self) -> &[SphereNode] {
        &self.nodes
    }

    pub fn resolution(&self) -> (usize, usize) {
        (self.n_theta, self.n_phi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn single_node_rule() {
        let q = gauss_legendre(1);
        assert_eq!(q.len(), 1);
        assert!(q[0].0.abs() < 1e-15);
        assert_relative_eq!(q[0].1, 2.0, max_relative = 1e-15);
    }

    #[test]
    fn two_node_rule_classical_values() {
        let q = gauss_legendre(2);
        let x = 1.0 / 3.0f64.sqrt();
        assert_relative_eq!(q[0].0, -x, max_relative = 1e-14);
        assert_relative_eq!(q[1].0, x, max_relative = 1e-14);
        assert_relative_eq!(q[0].1, 1.0, max_relative = 1e-14);
        assert_relative_eq!(q[1].1, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn exactness_degree_quartic() {
        // ∫ x^4 on [-1,1] = 2/5 with n = 3 nodes
        let q = gauss_legendre(3);
        let v: f64 = q.iter().map(|&(x, w)| w * x.powi(4)).sum();
        assert!((v - 0.4).abs() < 1e-14);
    }

    #[test]
    fn weights_sum_to_two() {
        for n in [5, 16, 24, 48, 64] {
            let s: f64 = gauss_legendre(n).iter().map(|&(_, w)| w).sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n} sum={s}");
        }
    }

    #[test]
    fn sphere_weights_sum_to_4pi() {
        let q = SphereQuadrature::new(24, 48);
        let s: f64 = q.nodes().iter().map(|n| n.weight).sum();
        assert_relative_eq!(s, 4.0 * std::f64::consts::PI, max_relative = 1e-13);
    }

    #[test]
    fn sphere_integrates_exponential_moment() {
        // ∫_{S²} e^{c·x̂} ds = 4π sinh(|c|)/|c|
        let q = SphereQuadrature::new(24, 48);
        let c = Vector3::new(1.0, 2.0, 2.0); // |c| = 3
        let got: f64 = q.nodes().iter().map(|n| (c.dot(&n.dir)).exp() * n.weight).sum();
        let want = 4.0 * std::f64::consts::PI * 3.0f64.sinh() / 3.0;
        assert_relative_eq!(got, want, max_relative = 1e-12);
    }
}
