//! Spherical harmonics for `l = 2` quantized along an arbitrary spatial axis.
//!
//! The ordinary spherical harmonics `Y_2m` are eigenfunctions of the angular-momentum
//! projection onto the z axis. This crate builds the analogous functions for a
//! quantization axis pointing in an arbitrary direction `â = (θ′, φ′)`, together with
//! the spin-2 probability amplitudes `χ(m_i, m_f)` that connect projections along `â`
//! to projections along z:
//!
//! ```text
//! Y(2, m^(â); θ, φ) = Σ_{m_f} χ(m, m_f) · Y_{2 m_f}(θ, φ)
//! χ(m_i, m_f)       = e^{−i·m_f·φ′} · d²_{m_f, m_i}(θ′)
//! ```
//!
//! where `d^j` is the Wigner small-d matrix. Everything downstream of that convention
//! is fixed: the amplitude matrix is unitary, reduces to the identity at `θ′ = φ′ = 0`,
//! and the generalized harmonics are exact eigenfunctions of the angular-momentum
//! component along `â` with eigenvalue `m` (in units of ħ).
//!
//! Modules:
//! - [`wigner`] — general-`j` rotation oracle (`small_d`, [`wigner::rotation_coefficients`]).
//! - [`amplitudes`] — the 25 explicit `l = 2` amplitude formulas, one function each.
//! - [`harmonics`] — standard harmonics, the composed sum, and the three closed-form
//!   families (z′, x′, y′) in both as-tabulated and substitution-derived variants.
//! - [`quadrature`] — Gauss–Legendre × trapezoid grids on the sphere.
//! - [`verify`] — orthonormality, parity, unitarity, sum-rule, and eigenvalue checks.
//! - [`errata`] — measured discrepancies between the tabulated closed forms and the
//!   substitution-derived forms, with inferred corrected prefactors.

pub mod amplitudes;
pub mod errata;
pub mod harmonics;
pub mod quadrature;
pub mod types;
pub mod verify;
pub mod wigner;

pub use num_complex::Complex64;
pub use types::{
    AmplitudeMatrix, AngularPosition, Direction, Error, HalfInt, Result, M_VALUES,
};
