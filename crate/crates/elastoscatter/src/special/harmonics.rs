//! Complex spherical harmonics Y_n^m(θ, φ) with the normalization
//! sqrt((2n+1)/4π (n-|m|)!/(n+|m|)!) P_n^{|m|}(cos θ) e^{imφ}
//! (no Condon-Shortley phase), orthonormal on the unit sphere.

use num_complex::Complex64;

use super::legendre::normalized_legendre_table;
use crate::{Error, Result};

/// Spherical-harmonic mode (degree n, order m with |m| <= n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeIndex {
    pub n: usize,
    pub m: i64,
}

impl ModeIndex {
    pub fn new(n: usize, m: i64) -> Result<Self> {
        if m.unsigned_abs() as usize > n {
            return Err(Error::ModeIndex { n, m });
        }
        Ok(Self { n, m })
    }
}

/// Y_n^m(θ, φ).
pub fn sph_harmonic(mode: ModeIndex, theta: f64, phi: f64) -> Complex64 {
    let ma = mode.m.unsigned_abs() as usize;
    let p = normalized_legendre_table(mode.n, theta.cos()).get(mode.n, ma);
    p * Complex64::from_polar(1.0, mode.m as f64 * phi)
}

/// All Y_n^m for 0 <= n <= n_max, -n <= m <= n, in (n, m) row order
/// (index n*n + (m + n)).
pub fn sph_harmonics_upto(n_max: usize, theta: f64, phi: f64) -> Vec<Complex64> {
    let tab = normalized_legendre_table(n_max, theta.cos());
    let mut out = Vec::with_capacity((n_max + 1) * (n_max + 1));
    for n in 0..=n_max {
        for m in -(n as i64)..=(n as i64) {
            let p = tab.get(n, m.unsigned_abs() as usize);
            out.push(p * Complex64::from_polar(1.0, m as f64 * phi));
        }
    }
    out
}

/// Flat index of mode (n, m) in the layout of [`sph_harmonics_upto`].
pub fn mode_flat_index(n: usize, m: i64) -> usize {
    n * n + (m + n as i64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::SphereQuadrature;

    #[test]
    fn constant_mode() {
        let v = sph_harmonic(ModeIndex::new(0, 0).unwrap(), 1.234, 4.3);
        let want = 1.0 / (4.0 * std::f64::consts::PI).sqrt();
        assert!((v - Complex64::new(want, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn rejects_invalid_mode() {
        assert!(ModeIndex::new(1, 2).is_err());
        assert!(ModeIndex::new(0, -1).is_err());
        assert!(ModeIndex::new(3, -3).is_ok());
    }

    #[test]
    fn quadrature_orthonormality_pairs() {
        let quad = SphereQuadrature::new(12, 25);
        let y10 = |th: f64, ph: f64| sph_harmonic(ModeIndex::new(1, 0).unwrap(), th, ph);
        let y21 = |th: f64, ph: f64| sph_harmonic(ModeIndex::new(2, 1).unwrap(), th, ph);
        let mut norm = Complex64::new(0.0, 0.0);
        let mut cross = Complex64::new(0.0, 0.0);
        for q in quad.nodes() {
            let a = y10(q.theta, q.phi);
            let b = y21(q.theta, q.phi);
            norm += a * a.conj() * q.weight;
            cross += a * b.conj() * q.weight;
        }
        assert!((norm.re - 1.0).abs() < 1e-10 && norm.im.abs() < 1e-14);
        assert!(cross.norm() < 1e-10);
    }

    #[test]
    fn gram_matrix_is_identity_up_to_degree_8() {
        let n_max = 8usize;
        let quad = SphereQuadrature::new(2 * (n_max + 1), 4 * (n_max + 1) + 1);
        let dim = (n_max + 1) * (n_max + 1);
        let mut gram = vec![Complex64::new(0.0, 0.0); dim * dim];
        for q in quad.nodes() {
            let ys = sph_harmonics_upto(n_max, q.theta, q.phi);
            for a in 0..dim {
                for b in 0..dim {
                    gram[a * dim + b] += ys[a] * ys[b].conj() * q.weight;
                }
            }
        }
        let mut worst = 0.0f64;
        for a in 0..dim {
            for b in 0..dim {
                let want = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((gram[a * dim + b] - want).norm());
            }
        }
        assert!(worst < 1e-9, "gram deviation {worst}");
    }
}
