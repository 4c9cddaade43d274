//! Dense complex least squares through a thin SVD with relative
//! singular-value truncation (truncated pseudoinverse).

use faer::prelude::*;
use num_complex::Complex64;

use crate::{Error, Result};

/// Thin SVD of an m×n complex matrix with singular values below
/// `rel_threshold * sigma_max` discarded when applying the pseudoinverse.
pub struct TruncatedSvdLsq {
    svd: faer::linalg::solvers::Svd<Complex64>,
    nrows: usize,
    ncols: usize,
    rank: usize,
    sigma_max: f64,
    rel_threshold: f64,
}

impl TruncatedSvdLsq {
    pub fn new(a: Mat<Complex64>, rel_threshold: f64) -> Result<Self> {
        let (nrows, ncols) = a.shape();
        let svd = faer::linalg::solvers::Svd::new_thin(a.as_ref())
            .map_err(|e| Error::FitFailure(format!("svd did not converge: {e:?}")))?;
        let k = usize::min(nrows, ncols);
        let sigma_max = if k > 0 { svd.S()[0].re } else { 0.0 };
        let cut = rel_threshold * sigma_max;
        let rank = (0..k).take_while(|&i| svd.S()[i].re > cut).count();
        Ok(Self {
            svd,
            nrows,
            ncols,
            rank,
            sigma_max,
            rel_threshold,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sigma_max(&self) -> f64 {
        self.sigma_max
    }

    pub fn rel_threshold(&self) -> f64 {
        self.rel_threshold
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    /// Minimum-norm least-squares solution x = V Σ⁺ Uᴴ b.
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(b.len(), self.nrows, "rhs length mismatch");
        let u = self.svd.U();
        let v = self.svd.V();
        let s = self.svd.S();
        let k = usize::min(self.nrows, self.ncols);
        let mut proj = vec![Complex64::new(0.0, 0.0); k];
        for (i, p) in proj.iter_mut().enumerate().take(self.rank) {
            let mut acc = Complex64::new(0.0, 0.0);
            for r in 0..self.nrows {
                acc += u[(r, i)].conj() * b[r];
            }
            *p = acc / s[i];
        }
        let mut x = vec![Complex64::new(0.0, 0.0); self.ncols];
        for (c, xc) in x.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, p) in proj.iter().enumerate().take(self.rank) {
                acc += v[(c, i)] * p;
            }
            *xc = acc;
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_square_system() {
        let a = Mat::from_fn(3, 3, |i, j| {
            Complex64::new((i + 1) as f64 * (j + 2) as f64, (i as f64) - (j as f64))
                + if i == j {
                    Complex64::new(5.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
        });
        let x_true = [
            Complex64::new(1.0, -2.0),
            Complex64::new(0.5, 0.25),
            Complex64::new(-1.5, 1.0),
        ];
        let mut b = vec![Complex64::new(0.0, 0.0); 3];
        for i in 0..3 {
            for j in 0..3 {
                b[i] += a[(i, j)] * x_true[j];
            }
        }
        let lsq = TruncatedSvdLsq::new(a, 1e-12).unwrap();
        assert_eq!(lsq.rank(), 3);
        let x = lsq.solve(&b);
        for j in 0..3 {
            assert!((x[j] - x_true[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn overdetermined_consistent_system_is_recovered() {
        // 8×3 with exactly consistent rhs
        let a = Mat::from_fn(8, 3, |i, j| {
            Complex64::new(((i * 3 + j) % 7) as f64 + 1.0, ((i + j) % 5) as f64 - 2.0)
        });
        let x_true = [
            Complex64::new(0.3, 0.1),
            Complex64::new(-1.0, 0.7),
            Complex64::new(2.0, -0.4),
        ];
        let mut b = vec![Complex64::new(0.0, 0.0); 8];
        for i in 0..8 {
            for j in 0..3 {
                b[i] += a[(i, j)] * x_true[j];
            }
        }
        let lsq = TruncatedSvdLsq::new(a, 1e-12).unwrap();
        let x = lsq.solve(&b);
        for j in 0..3 {
            assert!((x[j] - x_true[j]).norm() < 1e-11);
        }
    }

    #[test]
    fn rank_deficient_column_is_truncated() {
        // third column is a copy of the first: rank 2, no NaNs from Σ⁺
        let a = Mat::from_fn(6, 3, |i, j| {
            let jj = if j == 2 { 0 } else { j };
            Complex64::new((i + jj + 1) as f64, (i as f64) * 0.5 - jj as f64)
        });
        let mut b = vec![Complex64::new(0.0, 0.0); 6];
        for i in 0..6 {
            b[i] = Complex64::new(i as f64, 1.0);
        }
        let lsq = TruncatedSvdLsq::new(a, 1e-10).unwrap();
        assert_eq!(lsq.rank(), 2);
        let x = lsq.solve(&b);
        assert!(x.iter().all(|c| c.re.is_finite() && c.im.is_finite()));
        // minimum-norm solution puts equal weight on the duplicated columns
        assert!((x[0] - x[2]).norm() < 1e-10);
    }
}
