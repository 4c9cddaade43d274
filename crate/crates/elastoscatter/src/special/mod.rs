//! Spherical Bessel/Hankel functions, associated Legendre functions,
//! spherical harmonics and Gauss-Legendre quadrature.

mod bessel;
mod harmonics;
mod legendre;
mod quadrature;

pub use bessel::{
    sph_bessel_j, sph_bessel_j_deriv, sph_bessel_y, sph_bessel_y_deriv, sph_hankel1,
    sph_hankel1_deriv, sph_hankel2,
};
pub use harmonics::{mode_flat_index, sph_harmonic, sph_harmonics_upto, ModeIndex};
pub use legendre::{normalized_assoc_legendre, normalized_legendre_table, real_sph_harmonic};
pub use quadrature::{gauss_legendre, SphereQuadrature};
