//! Fundamental tensor of the Navier operator (Kupradze matrix) in radial form
//! and its surface traction, both in closed form.
//!
//! With phi_k(r) = e^{i k r}/(4 pi r) and D = phi_{kappa_s} - phi_{kappa_p},
//! the tensor splits as
//!
//! ```text
//! Ups(x, y) = psi1(r) I + psi2(r) rhat rhatᵀ,   r = |x - y|, rhat = (x-y)/r,
//! psi1 = (kappa_s² phi_s + D'/r) / omega²,
//! psi2 = (D'' - D'/r) / omega²,
//! ```
//!
//! which follows from the Hessian of a radial function,
//! ∇∇ᵀ f(r) = f'' rhat rhatᵀ + (f'/r)(I - rhat rhatᵀ). The traction needs the
//! first radial derivatives psi1', psi2' as well; all are assembled from the
//! derivatives of phi up to third order.

use num_complex::Complex64;

use super::{CMat3, Material, RVec3};
use crate::{Error, Result};

const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

/// Relative coincidence threshold: x and y closer than this times the
/// separation scale cannot be evaluated.
pub const COINCIDENCE_RELATIVE: f64 = 1e-12;

/// phi(r) = e^{ikr}/(4 pi r) and its first three derivatives.
fn phi_derivs(k: f64, r: f64) -> [Complex64; 4] {
    let e = Complex64::from_polar(1.0, k * r) / FOUR_PI;
    let (r1, r2, r3, r4) = (r, r * r, r * r * r, r * r * r * r);
    let ik = Complex64::new(0.0, k);
    let k2 = k * k;
    let ik3 = Complex64::new(0.0, k2 * k);
    [
        e / r1,
        e * (ik / r1 - Complex64::new(1.0, 0.0) / r2),
        e * (Complex64::new(-k2, 0.0) / r1 - 2.0 * ik / r2 + Complex64::new(2.0, 0.0) / r3),
        e * (-ik3 / r1 + Complex64::new(3.0 * k2, 0.0) / r2 + 6.0 * ik / r3
            - Complex64::new(6.0, 0.0) / r4),
    ]
}

/// Radial coefficients of the fundamental tensor at separation r:
/// values psi1, psi2 and radial derivatives dpsi1, dpsi2.
#[derive(Debug, Clone, Copy)]
pub struct KupradzeRadial {
    pub psi1: Complex64,
    pub psi2: Complex64,
    pub dpsi1: Complex64,
    pub dpsi2: Complex64,
}

/// Evaluate the radial coefficient functions at separation r > 0.
pub fn kupradze_radial(r: f64, mat: &Material) -> KupradzeRadial {
    let (kp, ks) = mat.wave_numbers();
    let w2 = mat.omega * mat.omega;
    let ps = phi_derivs(ks, r);
    let pp = phi_derivs(kp, r);
    let d1 = ps[1] - pp[1];
    let d2 = ps[2] - pp[2];
    let d3 = ps[3] - pp[3];
    let ks2 = ks * ks;
    KupradzeRadial {
        psi1: (ps[0] * ks2 + d1 / r) / w2,
        psi2: (d2 - d1 / r) / w2,
        dpsi1: (ps[1] * ks2 + (d2 * r - d1) / (r * r)) / w2,
        dpsi2: (d3 - (d2 * r - d1) / (r * r)) / w2,
    }
}

fn separation(x: &RVec3, y: &RVec3) -> Result<(f64, RVec3)> {
    let d = x - y;
    let r = d.norm();
    let scale = x.norm().max(y.norm()).max(1.0);
    let threshold = COINCIDENCE_RELATIVE * scale;
    if r < threshold {
        return Err(Error::Coincident {
            dist: r,
            threshold,
        });
    }
    Ok((r, d / r))
}

/// Fundamental tensor Ups(x, y) for x != y; symmetric as a matrix and under
/// argument swap.
pub fn kupradze_tensor(x: &RVec3, y: &RVec3, mat: &Material) -> Result<CMat3> {
    let (r, rhat) = separation(x, y)?;
    let c = kupradze_radial(r, mat);
    let mut out = CMat3::zeros();
    for i in 0..3 {
        out[(i, i)] = c.psi1;
        for j in 0..3 {
            out[(i, j)] += c.psi2 * (rhat[i] * rhat[j]);
        }
    }
    Ok(out)
}

/// Gradient tensor g[i][j][k] = ∂/∂x_k Ups_{ij}(x, y).
fn kupradze_gradient(r: f64, rhat: &RVec3, mat: &Material) -> [[[Complex64; 3]; 3]; 3] {
    let c = kupradze_radial(r, mat);
    let mut g = [[[Complex64::new(0.0, 0.0); 3]; 3]; 3];
    let id = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut v = c.dpsi1 * (rhat[k] * id(i, j)) + c.dpsi2 * (rhat[k] * rhat[i] * rhat[j]);
                v += c.psi2
                    * (((id(i, k) - rhat[i] * rhat[k]) * rhat[j]
                        + rhat[i] * (id(j, k) - rhat[j] * rhat[k]))
                        / r);
                g[i][j][k] = v;
            }
        }
    }
    g
}

/// Traction of the fundamental tensor, applied columnwise in its first
/// argument: column j of the result is T_{nu} [x -> Ups(x, y) e_j](x).
pub fn kupradze_traction(x: &RVec3, normal: &RVec3, y: &RVec3, mat: &Material) -> Result<CMat3> {
    let (r, rhat) = separation(x, y)?;
    let g = kupradze_gradient(r, &rhat, mat);
    let mut out = CMat3::zeros();
    for j in 0..3 {
        // Jacobian of column j: jac[(i, k)] = g[i][j][k]
        let mut div = Complex64::new(0.0, 0.0);
        for i in 0..3 {
            div += g[i][j][i];
        }
        for i in 0..3 {
            let mut t = div * (mat.lambda * normal[i]);
            for k in 0..3 {
                t += (g[i][j][k] + g[k][j][i]) * (mat.mu * normal[k]);
            }
            out[(i, j)] = t;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elasto::{navier_residual_fd, CVec3};
    use nalgebra::Vector3;
    use rand::prelude::*;
    use rand::rngs::StdRng;

    fn mat() -> Material {
        Material::new(2.0, 1.0, 2.0).unwrap()
    }

    fn rand_point(rng: &mut StdRng, scale: f64) -> RVec3 {
        Vector3::new(
            (rng.random::<f64>() - 0.5) * scale,
            (rng.random::<f64>() - 0.5) * scale,
            (rng.random::<f64>() - 0.5) * scale,
        )
    }

    #[test]
    fn matrix_and_swap_symmetry() {
        let m = mat();
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..100 {
            let x = rand_point(&mut rng, 4.0);
            let mut y = rand_point(&mut rng, 4.0);
            if (x - y).norm() < 1e-3 {
                y += Vector3::new(0.5, 0.0, 0.0);
            }
            let u = kupradze_tensor(&x, &y, &m).unwrap();
            let swapped = kupradze_tensor(&y, &x, &m).unwrap();
            assert!((u - u.transpose()).norm() <= 1e-13 * u.norm());
            assert!((u - swapped).norm() <= 1e-13 * u.norm());
        }
    }

    #[test]
    fn coincidence_is_rejected() {
        let m = mat();
        let x = Vector3::new(1.0, 2.0, 3.0);
        let y = x + Vector3::new(1e-14, 0.0, 0.0);
        assert!(matches!(
            kupradze_tensor(&x, &y, &m),
            Err(Error::Coincident { .. })
        ));
    }

    #[test]
    fn definition_form_cross_check() {
        // independent oracle: (kappa_s²/omega²) phi_s I + Hess[phi_s - phi_p]/omega²
        // with the Hessian taken by central finite differences of the scalars
        let m = mat();
        let (kp, ks) = m.wave_numbers();
        let w2 = m.omega * m.omega;
        let y = Vector3::new(0.1, -0.2, 0.3);
        let scalar = |p: &RVec3| -> Complex64 {
            let r = (p - y).norm();
            (Complex64::from_polar(1.0, ks * r) - Complex64::from_polar(1.0, kp * r)) / (FOUR_PI * r)
        };
        let h = 1e-5;
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..5 {
            let x = y + rand_point(&mut rng, 1.0) + Vector3::new(1.2, 0.0, 0.0);
            let r = (x - y).norm();
            let mut oracle = CMat3::zeros();
            for i in 0..3 {
                for j in 0..3 {
                    let mut e1 = Vector3::zeros();
                    e1[i] = h;
                    let mut e2 = Vector3::zeros();
                    e2[j] = h;
                    let hess = (scalar(&(x + e1 + e2)) - scalar(&(x + e1 - e2))
                        - scalar(&(x - e1 + e2))
                        + scalar(&(x - e1 - e2)))
                        / (4.0 * h * h);
                    oracle[(i, j)] = hess / w2;
                }
            }
            let phi_s = Complex64::from_polar(1.0, ks * r) / (FOUR_PI * r);
            for i in 0..3 {
                oracle[(i, i)] += phi_s * (ks * ks / w2);
            }
            let u = kupradze_tensor(&x, &y, &m).unwrap();
            assert!(
                (u - oracle).norm() < 5e-6 * u.norm(),
                "radial form deviates from definition by {}",
                (u - oracle).norm() / u.norm()
            );
        }
    }

    #[test]
    fn columns_solve_navier_equation_at_second_order() {
        let m = mat();
        let y = Vector3::new(0.0, 0.0, 0.0);
        let x = Vector3::new(0.31, 0.2, -0.27); // r ≈ 0.5
        for j in 0..3 {
            let field = |p: &RVec3| -> CVec3 {
                crate::elasto::column_vec(&kupradze_tensor(p, &y, &m).unwrap(), j)
            };
            let r1 = navier_residual_fd(&field, &x, &m, 2e-3).norm();
            let r2 = navier_residual_fd(&field, &x, &m, 1e-3).norm();
            let order = (r1 / r2).log2();
            assert!(
                (order - 2.0).abs() < 0.2,
                "column {j}: Richardson order {order}"
            );
        }
    }

    #[test]
    fn magnitude_bounded_by_inverse_distance() {
        // |Ups| <= C / (4 pi r) with C bounded over r in [0.1, 10]
        let m = mat();
        let y = Vector3::zeros();
        let dir = Vector3::new(0.3, -0.5, 0.81).normalize();
        let mut c_max: f64 = 0.0;
        let mut r = 0.1;
        while r <= 10.0 {
            let u = kupradze_tensor(&(y + dir * r), &y, &m).unwrap();
            c_max = c_max.max(u.norm() * FOUR_PI * r);
            r *= 1.3;
        }
        assert!(c_max < 10.0, "growth constant {c_max}");
    }

    #[test]
    fn traction_matches_finite_differences() {
        let m = mat();
        let y = Vector3::new(0.2, 0.1, -0.4);
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..10 {
            let x = y + rand_point(&mut rng, 2.0) + Vector3::new(1.0, 0.8, 0.0);
            let r = (x - y).norm();
            let nu = rand_point(&mut rng, 1.0).normalize();
            let t = kupradze_traction(&x, &nu, &y, &m).unwrap();
            let h = 1e-4 * r;
            let mut fd = CMat3::zeros();
            for j in 0..3 {
                // FD Jacobian of column j, then the traction formula
                let mut jac = CMat3::zeros();
                for k in 0..3 {
                    let mut e = Vector3::zeros();
                    e[k] = h;
                    let up = kupradze_tensor(&(x + e), &y, &m).unwrap();
                    let dn = kupradze_tensor(&(x - e), &y, &m).unwrap();
                    for i in 0..3 {
                        jac[(i, k)] = (up[(i, j)] - dn[(i, j)]) / (2.0 * h);
                    }
                }
                let col = crate::elasto::traction(&m, &nu, &jac);
                for i in 0..3 {
                    fd[(i, j)] = col[i];
                }
            }
            let dev = (t - fd).norm() / t.norm();
            assert!(dev < 1e-5, "traction FD deviation {dev}");
        }
    }

    #[test]
    fn traction_far_field_decay() {
        // entries decay like 1/r: log-log slope -1 ± 0.05 over r in [50, 400]
        let m = mat();
        let y = Vector3::zeros();
        let dir = Vector3::new(0.48, 0.6, 0.64).normalize();
        let nu = Vector3::new(0.0, 0.0, 1.0);
        let radii = [50.0, 100.0, 200.0, 400.0];
        let mags: Vec<f64> = radii
            .iter()
            .map(|&r| {
                kupradze_traction(&(dir * r), &nu, &y, &m)
                    .unwrap()
                    .norm()
                    .ln()
            })
            .collect();
        let slope = fit_slope(&radii.map(|r| r.ln()), &mags);
        assert!((slope + 1.0).abs() < 0.05, "decay slope {slope}");
    }

    fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ys.iter().sum::<f64>() / n;
        let num: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        num / den
    }

    #[test]
    fn enclosing_sphere_traction_identity() {
        // For constant c and a sphere W centered at the pole y:
        //   ∮_{∂W} (T_nu Ups(·, y))ᵀ c ds + omega² ∫_W Upsᵀ c dV = -c.
        // The volume integral reduces to a 1-D radial quadrature because
        // ∫_{S²} rhat rhatᵀ ds = (4π/3) I.
        let m = mat();
        let y = Vector3::new(0.3, -0.1, 0.2);
        let radius = 0.9;
        let c = CVec3::new(
            Complex64::new(0.7, 0.0),
            Complex64::new(-0.2, 0.0),
            Complex64::new(0.4, 0.0),
        );

        let quad = crate::special::SphereQuadrature::new(24, 48);
        let mut surface = CVec3::zeros();
        for q in quad.nodes() {
            let x = y + q.dir * radius;
            let t = kupradze_traction(&x, &q.dir, &y, &m).unwrap();
            surface += t.transpose() * c * Complex64::new(q.weight * radius * radius, 0.0);
        }

        let mut volume = CVec3::zeros();
        for &(t, w) in &crate::special::gauss_legendre(48) {
            let rho = radius * 0.5 * (t + 1.0);
            let drho = radius * 0.5 * w;
            let rad = kupradze_radial(rho, &m);
            // ∫_{S²} Ups(y + rho s, y) ds(s) = 4π psi1 I + (4π/3) psi2 I
            let iso = rad.psi1 * (4.0 * std::f64::consts::PI)
                + rad.psi2 * (4.0 * std::f64::consts::PI / 3.0);
            volume += c * (iso * (rho * rho * drho));
        }
        let total = surface + volume * Complex64::new(m.omega * m.omega, 0.0);
        let dev = (total + c).norm();
        assert!(dev < 1e-8, "enclosing-sphere identity deviation {dev}");
    }
}
