//! Shared domain types: angles, quantum numbers, amplitude matrices, and errors.

pub use num_complex::Complex64;
use std::f64::consts::{PI, TAU};
use std::fmt;

/// Projection quantum numbers for `l = 2`, in the row/column order used by every
/// 5-vector and 5×5 matrix in this crate (m descending).
pub const M_VALUES: [i32; 5] = [2, 1, 0, -1, -2];

/// e^{ix} as a complex value.
pub(crate) fn cis(x: f64) -> Complex64 {
    Complex64::new(x.cos(), x.sin())
}

/// Everything that can go wrong with inputs or sampled values.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("projection m = {m} is invalid for j = {j} (need |m| <= j with matching parity)")]
    ProjectionOutOfRange { j: HalfInt, m: HalfInt },
    #[error("total angular momentum j = {j} unsupported (need 0 <= j <= 16)")]
    TotalAngularMomentum { j: HalfInt },
    #[error("m = {m} out of range for l = 2 (expected -2..=2)")]
    MOutOfRange { m: i32 },
    #[error("polar angle {theta} outside [0, pi]")]
    PolarAngleRange { theta: f64 },
    #[error("angle is not finite: {value}")]
    NonFiniteAngle { value: f64 },
    #[error("sampling rule needs at least one node per dimension")]
    EmptyQuadrature,
    #[error("non-finite sample {value} at node (theta = {theta}, phi = {phi})")]
    NonFiniteSample {
        value: Complex64,
        theta: f64,
        phi: f64,
    },
    #[error("theta = {theta} is within {margin} of a coordinate pole")]
    PoleProximity { theta: f64, margin: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

/// An angular-momentum quantum number stored as twice its value, so that
/// half-integers (j = 1/2, 3/2, ...) are represented exactly. Every instantiation
/// in this crate is an integer, but the representation does not forbid halves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    /// Builds from twice the value (`from_twice(3)` is 3/2).
    pub const fn from_twice(twice: i32) -> Self {
        Self { twice }
    }

    /// Builds from an integer value (`from_int(2)` is 2).
    pub const fn from_int(value: i32) -> Self {
        Self { twice: 2 * value }
    }

    /// Twice the stored value.
    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }
}

impl From<i32> for HalfInt {
    fn from(value: i32) -> Self {
        Self::from_int(value)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

fn check_polar(theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::NonFiniteAngle { value: theta });
    }
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::PolarAngleRange { theta });
    }
    Ok(theta)
}

fn normalize_azimuth(phi: f64) -> Result<f64> {
    if !phi.is_finite() {
        return Err(Error::NonFiniteAngle { value: phi });
    }
    let mut p = phi.rem_euclid(TAU);
    // rem_euclid of a tiny negative can round up to exactly 2π.
    if p >= TAU {
        p = 0.0;
    }
    Ok(p)
}

/// A quantization axis â given by its polar angles (θ′, φ′). θ′ ∈ [0, π];
/// φ′ is normalized into [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    pub fn new(theta_prime: f64, phi_prime: f64) -> Result<Self> {
        Ok(Self {
            theta: check_polar(theta_prime)?,
            phi: normalize_azimuth(phi_prime)?,
        })
    }

    /// The z axis: θ′ = φ′ = 0.
    pub fn z_axis() -> Self {
        Self { theta: 0.0, phi: 0.0 }
    }

    pub fn theta_prime(&self) -> f64 {
        self.theta
    }

    pub fn phi_prime(&self) -> f64 {
        self.phi
    }
}

/// An evaluation point (θ, φ) on the sphere. θ ∈ [0, π]; φ normalized into [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularPosition {
    theta: f64,
    phi: f64,
}

impl AngularPosition {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        Ok(Self {
            theta: check_polar(theta)?,
            phi: normalize_azimuth(phi)?,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The point reached by reflection through the origin: (π − θ, φ + π).
    pub fn parity_image(&self) -> Self {
        Self {
            theta: PI - self.theta,
            phi: normalize_azimuth(self.phi + PI).expect("finite azimuth stays finite"),
        }
    }
}

/// A (2j+1)×(2j+1) complex matrix of probability amplitudes, indexed by projection
/// quantum numbers; rows are the initial projection m_i along the quantization axis,
/// columns the final projection m_f along z, both in descending m order.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeMatrix {
    two_j: i32,
    dim: usize,
    entries: Vec<Complex64>,
}

impl AmplitudeMatrix {
    /// An all-zero matrix for the given j.
    pub fn zero(j: HalfInt) -> Self {
        let dim = (j.twice() + 1).max(0) as usize;
        Self {
            two_j: j.twice(),
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn j(&self) -> HalfInt {
        HalfInt::from_twice(self.two_j)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Index of projection m in descending order; panics if m is not a valid
    /// projection for this j (callers validate quantum numbers at the API boundary).
    fn index_of(&self, m: HalfInt) -> usize {
        let offset = self.two_j - m.twice();
        assert!(
            offset >= 0 && offset % 2 == 0 && (offset / 2) < self.dim as i32,
            "projection {m} invalid for j = {}",
            self.j()
        );
        (offset / 2) as usize
    }

    /// The projection quantum number of row/column `index`.
    pub fn m_at(&self, index: usize) -> HalfInt {
        assert!(index < self.dim, "index {index} out of range");
        HalfInt::from_twice(self.two_j - 2 * index as i32)
    }

    pub fn get(&self, m_i: HalfInt, m_f: HalfInt) -> Complex64 {
        self.entries[self.index_of(m_i) * self.dim + self.index_of(m_f)]
    }

    pub fn set(&mut self, m_i: HalfInt, m_f: HalfInt, value: Complex64) {
        let idx = self.index_of(m_i) * self.dim + self.index_of(m_f);
        self.entries[idx] = value;
    }

    /// Row of amplitudes for initial projection m_i, columns in descending m_f.
    pub fn row(&self, m_i: HalfInt) -> &[Complex64] {
        let i = self.index_of(m_i);
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    /// Raw row-major entries, rows and columns in descending m.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// max entrywise |M·M† − I|.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for k in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for l in 0..n {
                    acc += self.entries[i * n + l] * self.entries[k * n + l].conj();
                }
                let target = if i == k { 1.0 } else { 0.0 };
                worst = worst.max((acc - target).norm());
            }
        }
        worst
    }

    /// max entrywise |M − I|.
    pub fn identity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for k in 0..n {
                let target = if i == k { 1.0 } else { 0.0 };
                worst = worst.max((self.entries[i * n + k] - target).norm());
            }
        }
        worst
    }

    /// max entrywise |self − other|; panics if dimensions differ.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_int_roundtrip_and_display() {
        assert_eq!(HalfInt::from_int(2).twice(), 4);
        assert_eq!(HalfInt::from_twice(3).to_f64(), 1.5);
        assert!(HalfInt::from_int(-1).is_integer());
        assert!(!HalfInt::from_twice(3).is_integer());
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
    }

    #[test]
    fn direction_normalizes_azimuth() {
        let d = Direction::new(1.0, -0.5).unwrap();
        assert!((d.phi_prime() - (TAU - 0.5)).abs() < 1e-15);
        let d = Direction::new(1.0, TAU + 0.25).unwrap();
        assert!((d.phi_prime() - 0.25).abs() < 1e-15);
        // A tiny negative azimuth must not normalize to exactly 2π.
        let d = Direction::new(1.0, -1e-30).unwrap();
        assert!(d.phi_prime() < TAU);
    }

    #[test]
    fn direction_rejects_bad_polar() {
        assert!(matches!(
            Direction::new(-0.1, 0.0),
            Err(Error::PolarAngleRange { .. })
        ));
        assert!(matches!(
            Direction::new(PI + 0.1, 0.0),
            Err(Error::PolarAngleRange { .. })
        ));
        assert!(matches!(
            Direction::new(f64::NAN, 0.0),
            Err(Error::NonFiniteAngle { .. })
        ));
        assert!(matches!(
            Direction::new(1.0, f64::INFINITY),
            Err(Error::NonFiniteAngle { .. })
        ));
    }

    #[test]
    fn parity_image_maps_as_expected() {
        let p = AngularPosition::new(0.3, 0.4).unwrap();
        let q = p.parity_image();
        assert!((q.theta() - (PI - 0.3)).abs() < 1e-15);
        assert!((q.phi() - (0.4 + PI)).abs() < 1e-15);
    }

    #[test]
    fn amplitude_matrix_indexing_is_m_descending() {
        let mut m = AmplitudeMatrix::zero(HalfInt::from_int(2));
        assert_eq!(m.dim(), 5);
        assert_eq!(m.m_at(0), HalfInt::from_int(2));
        assert_eq!(m.m_at(4), HalfInt::from_int(-2));
        m.set(
            HalfInt::from_int(2),
            HalfInt::from_int(-2),
            Complex64::new(7.0, 0.0),
        );
        assert_eq!(m.entries()[4], Complex64::new(7.0, 0.0));
        assert_eq!(
            m.get(HalfInt::from_int(2), HalfInt::from_int(-2)),
            Complex64::new(7.0, 0.0)
        );
        assert_eq!(m.row(HalfInt::from_int(2))[4], Complex64::new(7.0, 0.0));
    }

    #[test]
    fn deviations_on_handmade_matrices() {
        let mut m = AmplitudeMatrix::zero(HalfInt::from_int(1));
        for k in 0..3 {
            let q = m.m_at(k);
            m.set(q, q, Complex64::new(1.0, 0.0));
        }
        assert_eq!(m.unitarity_deviation(), 0.0);
        assert_eq!(m.identity_deviation(), 0.0);
        let mut n = m.clone();
        n.set(
            HalfInt::from_int(0),
            HalfInt::from_int(1),
            Complex64::new(0.0, 0.5),
        );
        assert!((n.max_abs_diff(&m) - 0.5).abs() < 1e-15);
        assert!(n.unitarity_deviation() > 0.2);
    }
}
