//! Fully normalized associated Legendre functions without the
//! Condon-Shortley phase, and the real spherical-harmonic basis built on
//! them. Normalization is chosen so that the complex harmonics
//! P̄_n^m(cos θ) e^{imφ} are orthonormal on the unit sphere.

/// Table of P̄_n^m(t) for all 0 <= m <= n <= n_max, indexed by `idx(n, m)`.
///
/// The recurrence operates directly on the normalized values (geodesy
/// convention, no Condon-Shortley phase) and is stable up to high degree.
pub struct NormalizedLegendreTable {
    n_max: usize,
    values: Vec<f64>,
}

impl NormalizedLegendreTable {
    fn idx(&self, n: usize, m: usize) -> usize {
        debug_assert!(m <= n && n <= self.n_max);
        n * (n + 1) / 2 + m
    }

    /// P̄_n^m(t), requires m <= n <= n_max.
    pub fn get(&self, n: usize, m: usize) -> f64 {
        self.values[self.idx(n, m)]
    }
}

/// Build the normalized associated Legendre table at t = cos θ.
pub fn normalized_legendre_table(n_max: usize, t: f64) -> NormalizedLegendreTable {
    let s = (1.0 - t * t).max(0.0).sqrt(); // sin θ >= 0 for θ in [0, π]
    let len = (n_max + 1) * (n_max + 2) / 2;
    let mut tab = NormalizedLegendreTable {
        n_max,
        values: vec![0.0; len],
    };
    let idx = |n: usize, m: usize| n * (n + 1) / 2 + m;
    tab.values[0] = (1.0 / (4.0 * std::f64::consts::PI)).sqrt();
    for m in 1..=n_max {
        // diagonal: P̄_m^m = sin θ sqrt((2m+1)/(2m)) P̄_{m-1}^{m-1}
        let prev = tab.values[idx(m - 1, m - 1)];
        tab.values[idx(m, m)] = prev * s * ((2 * m + 1) as f64 / (2 * m) as f64).sqrt();
    }
    for m in 0..n_max {
        // first off-diagonal: P̄_{m+1}^m = t sqrt(2m+3) P̄_m^m
        tab.values[idx(m + 1, m)] = t * ((2 * m + 3) as f64).sqrt() * tab.values[idx(m, m)];
    }
    for m in 0..=n_max {
        for n in (m + 2)..=n_max {
            let nf = n as f64;
            let mf = m as f64;
            let a = ((4.0 * nf * nf - 1.0) / (nf * nf - mf * mf)).sqrt();
            let b = (((2.0 * nf + 1.0) * (nf - 1.0 + mf) * (nf - 1.0 - mf))
                / ((2.0 * nf - 3.0) * (nf * nf - mf * mf)))
                .sqrt();
            tab.values[idx(n, m)] =
                a * t * tab.values[idx(n - 1, m)] - b * tab.values[idx(n - 2, m)];
        }
    }
    tab
}

/// Single P̄_n^m(t) evaluation.
pub fn normalized_assoc_legendre(n: usize, m: usize, t: f64) -> f64 {
    normalized_legendre_table(n, t).get(n, m)
}

/// Real orthonormal spherical harmonic and its angular derivatives.
///
/// For m = 0 this is P̄_n^0(cos θ); for m > 0 it is √2 P̄_n^m(cos θ) cos(mφ)
/// and for m < 0 it is √2 P̄_n^{|m|}(cos θ) sin(|m|φ). Returns
/// (value, ∂/∂θ, ∂/∂φ).
pub fn real_sph_harmonic(n: usize, m: i64, theta: f64, phi: f64) -> (f64, f64, f64) {
    let ma = m.unsigned_abs() as usize;
    assert!(ma <= n, "order |m|={ma} exceeds degree n={n}");
    let t = theta.cos();
    let s = theta.sin();
    let tab = normalized_legendre_table(n, t);
    let p = tab.get(n, ma);
    // dP̄_n^m/dθ = [n t P̄_n^m - sqrt((n²-m²)(2n+1)/(2n-1)) P̄_{n-1}^m] / sin θ
    let dp_dtheta = if n == 0 {
        0.0
    } else {
        let nf = n as f64;
        let mf = ma as f64;
        let c = ((nf * nf - mf * mf) * (2.0 * nf + 1.0) / (2.0 * nf - 1.0)).sqrt();
        let lower = if ma <= n - 1 { tab.get(n - 1, ma) } else { 0.0 };
        (nf * t * p - c * lower) / s
    };
    let sqrt2 = std::f64::consts::SQRT_2;
    let (cos_m, sin_m) = ((ma as f64 * phi).cos(), (ma as f64 * phi).sin());
    match m.cmp(&0) {
        std::cmp::Ordering::Equal => (p, dp_dtheta, 0.0),
        std::cmp::Ordering::Greater => (
            sqrt2 * p * cos_m,
            sqrt2 * dp_dtheta * cos_m,
            -sqrt2 * p * (ma as f64) * sin_m,
        ),
        std::cmp::Ordering::Less => (
            sqrt2 * p * sin_m,
            sqrt2 * dp_dtheta * sin_m,
            sqrt2 * p * (ma as f64) * cos_m,
        ),
    }
}
