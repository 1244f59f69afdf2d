//! Standard l = 2 spherical harmonics, the amplitude-composed generalized
//! harmonics, and the three closed-form families (z′, x′, y′).
//!
//! Every family is ultimately a fixed coefficient vector over the five standard
//! harmonics. The composed family uses the amplitude table directly; the closed
//! forms are kept in two co-equal code paths — as-tabulated transcriptions and
//! substitution-derived variants — so the validation suite can *measure* their
//! differences instead of assuming either one.

use crate::amplitudes::{check_m, chi_row, chi_row_raw};
use crate::quadrature::SphereGrid;
use crate::types::{cis, AngularPosition, Complex64, Direction, Result, M_VALUES};
use std::f64::consts::FRAC_PI_2;

/// √(15/32π) — normalization of Y_{2,±2} and overall scale of most closed forms.
const NORM_22: f64 = 0.386_274_202_023_189_6;
/// √(15/8π) — normalization of Y_{2,±1}.
const NORM_21: f64 = 0.772_548_404_046_379_1;
/// √(5/16π) — normalization of Y_{2,0}.
const NORM_20: f64 = 0.315_391_565_252_520_05;
/// √(45/256π) — scale of the m = 0 closed form in the z′ family.
pub(crate) const PREF_Z0: f64 = 0.236_543_673_939_390_02;
/// √(15/128π) — scale of the x′/y′ closed forms as tabulated.
pub(crate) const PREF_X: f64 = 0.193_137_101_011_594_8;

/// Standard spherical harmonics for l = 2 (Condon–Shortley sign on m = +1):
///
/// ```text
/// Y_{2,±2} =  √(15/32π) sin²θ e^{±2iφ}
/// Y_{2,+1} = −√(15/8π)  sinθ cosθ e^{+iφ}
/// Y_{2,0}  =  √(5/16π) (3cos²θ − 1)
/// Y_{2,−1} = +√(15/8π)  sinθ cosθ e^{−iφ}
/// ```
pub fn std_ylm_l2(m: i32, pos: AngularPosition) -> Result<Complex64> {
    check_m(m)?;
    Ok(std_ylm_raw(m, pos.theta(), pos.phi()))
}

pub(crate) fn std_ylm_raw(m: i32, theta: f64, phi: f64) -> Complex64 {
    let (st, ct) = theta.sin_cos();
    match m {
        2 => NORM_22 * st * st * cis(2.0 * phi),
        1 => -NORM_21 * st * ct * cis(phi),
        0 => Complex64::new(NORM_20 * (3.0 * ct * ct - 1.0), 0.0),
        -1 => NORM_21 * st * ct * cis(-phi),
        -2 => NORM_22 * st * st * cis(-2.0 * phi),
        _ => unreachable!("callers validate m"),
    }
}

/// ∂Y_{2m}/∂θ in closed form (sinθcosθ = sin2θ/2 identities applied):
/// ∂Y_{2,±2}/∂θ = √(15/32π) sin2θ e^{±2iφ}, ∂Y_{2,±1}/∂θ = ∓√(15/8π) cos2θ e^{±iφ},
/// ∂Y_{2,0}/∂θ = −3√(5/16π) sin2θ.
pub(crate) fn std_ylm_dtheta_raw(m: i32, theta: f64, phi: f64) -> Complex64 {
    let (s2t, c2t) = (2.0 * theta).sin_cos();
    match m {
        2 => NORM_22 * s2t * cis(2.0 * phi),
        1 => -NORM_21 * c2t * cis(phi),
        0 => Complex64::new(-3.0 * NORM_20 * s2t, 0.0),
        -1 => NORM_21 * c2t * cis(-phi),
        -2 => NORM_22 * s2t * cis(-2.0 * phi),
        _ => unreachable!("callers validate m"),
    }
}

/// Σ_f coeffs[f] · Y_{2,m_f}(θ, φ), coefficients ordered m_f = +2, +1, 0, −1, −2.
pub(crate) fn combine(coeffs: &[Complex64; 5], theta: f64, phi: f64) -> Complex64 {
    M_VALUES
        .iter()
        .zip(coeffs)
        .map(|(&m_f, c)| c * std_ylm_raw(m_f, theta, phi))
        .sum()
}

/// The generalized harmonic built through the probability-amplitude composition:
///
/// ```text
/// Y(2, m^(â); θ, φ) = Σ_{m_f} χ(m, m_f) · Y_{2,m_f}(θ, φ)
/// ```
///
/// Reduces to [`std_ylm_l2`] at θ′ = φ′ = 0 and is an exact eigenfunction of the
/// angular-momentum component along â with eigenvalue m.
pub fn gen_ylm_composed(m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
    let row = chi_row(m, dir)?;
    Ok(combine(&row, pos.theta(), pos.phi()))
}

/// The five z′-family closed forms in their tabulated shape, evaluated at raw axis
/// angles; `alpha` may leave [0, π] (the forms are entire in the axis polar angle,
/// which is exactly what the x′/y′ substitution rules exploit). Writing
/// s = sin(α/2), c = cos(α/2), E_k = e^{ik(φ−φ_a)}, P = 3cos²θ − 1:
///
/// ```text
/// m=+2: √(15/32π)[ sin²θ(c⁴E₂ + s⁴E₋₂) + sin2θ·sinα(−c²E₁ + s²E₋₁) + ½sin²α·P ]
/// m=+1: √(15/32π)[ sinα·sin²θ(c²E₂ − s²E₋₂) − sin2θ((3s²−c²)c²E₁ + (3c²−s²)s²E₋₁) − ½sin2α·P ]
/// m= 0: √(45/256π)[ sin²α·sin²θ(E₂ + E₋₂) + sin2θ·sin2α(E₁ + E₋₁) + ⅔P(2cos²α − sin²α) ]
/// m=−1: √(15/32π)[ sinα·sin²θ(s²E₂ − c²E₋₂) + sin2θ((3c²−s²)s²E₁ + (3s²−c²)c²E₋₁) + ½sin2α·P ]
/// m=−2: √(15/32π)[ sin²θ(s⁴E₂ + c⁴E₋₂) + sin2θ·sinα(s²E₁ − c²E₋₁) + ½sin²α·P ]
/// ```
fn closed_z_tabulated_raw(m: i32, alpha: f64, phi_axis: f64, theta: f64, phi: f64) -> Complex64 {
    let (s, c) = (alpha / 2.0).sin_cos();
    let sa = alpha.sin();
    let (s2a, ca) = ((2.0 * alpha).sin(), alpha.cos());
    let st = theta.sin();
    let s2t = (2.0 * theta).sin();
    let ct = theta.cos();
    let p = 3.0 * ct * ct - 1.0;
    let sin2 = st * st;
    let e = |k: f64| cis(k * (phi - phi_axis));
    match m {
        2 => {
            NORM_22
                * (sin2 * (c.powi(4) * e(2.0) + s.powi(4) * e(-2.0))
                    + s2t * sa * (-(c * c) * e(1.0) + s * s * e(-1.0))
                    + 0.5 * sa * sa * p)
        }
        1 => {
            NORM_22
                * (sa * sin2 * (c * c * e(2.0) - s * s * e(-2.0))
                    - s2t
                        * ((3.0 * s * s - c * c) * c * c * e(1.0)
                            + (3.0 * c * c - s * s) * s * s * e(-1.0))
                    - 0.5 * s2a * p)
        }
        0 => {
            PREF_Z0
                * (sa * sa * sin2 * (e(2.0) + e(-2.0))
                    + s2t * s2a * (e(1.0) + e(-1.0))
                    + (2.0 / 3.0) * p * (2.0 * ca * ca - sa * sa))
        }
        -1 => {
            NORM_22
                * (sa * sin2 * (s * s * e(2.0) - c * c * e(-2.0))
                    + s2t
                        * ((3.0 * c * c - s * s) * s * s * e(1.0)
                            + (3.0 * s * s - c * c) * c * c * e(-1.0))
                    + 0.5 * s2a * p)
        }
        -2 => {
            NORM_22
                * (sin2 * (s.powi(4) * e(2.0) + c.powi(4) * e(-2.0))
                    + s2t * sa * (s * s * e(1.0) - c * c * e(-1.0))
                    + 0.5 * sa * sa * p)
        }
        _ => unreachable!("callers validate m"),
    }
}

/// The z′ closed forms with the m = ±1 overall sign aligned to the composed sum.
/// As tabulated, those two forms are the negatives of the amplitude composition
/// (at α = 0 they reduce to −Y_{2,±1} rather than Y_{2,±1}), so the aligned family
/// flips them back; the closed/composed equivalence and limit checks pin this.
pub(crate) fn closed_z_aligned_raw(
    m: i32,
    alpha: f64,
    phi_axis: f64,
    theta: f64,
    phi: f64,
) -> Complex64 {
    let v = closed_z_tabulated_raw(m, alpha, phi_axis, theta, phi);
    if m == 1 || m == -1 {
        -v
    } else {
        v
    }
}

/// Closed-form z′ family. Agrees with [`gen_ylm_composed`] everywhere and reduces
/// to [`std_ylm_l2`] at θ′ = φ′ = 0.
pub fn gen_ylm_closed_z(m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
    check_m(m)?;
    Ok(closed_z_aligned_raw(
        m,
        dir.theta_prime(),
        dir.phi_prime(),
        pos.theta(),
        pos.phi(),
    ))
}

/// The z′ closed forms exactly as tabulated: for m = ±1 this is the negative of
/// [`gen_ylm_closed_z`]; for the other m the two coincide. Kept for the errata
/// report, never used by the verified families.
pub fn tabulated_closed_z(m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
    check_m(m)?;
    Ok(closed_z_tabulated_raw(
        m,
        dir.theta_prime(),
        dir.phi_prime(),
        pos.theta(),
        pos.phi(),
    ))
}

/// An evaluation rule produced by a quantization-axis substitution: the z′ family
/// re-evaluated at shifted axis angles. The shifted polar angle may leave [0, π].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubstitutedAxis {
    alpha: f64,
    phi_axis: f64,
}

impl SubstitutedAxis {
    /// Effective axis polar angle fed to the z′ forms.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Effective axis azimuth fed to the z′ forms.
    pub fn phi_axis(&self) -> f64 {
        self.phi_axis
    }

    /// The substitution-derived harmonic of projection m at `pos`.
    pub fn eval(&self, m: i32, pos: AngularPosition) -> Result<Complex64> {
        check_m(m)?;
        Ok(closed_z_aligned_raw(
            m,
            self.alpha,
            self.phi_axis,
            pos.theta(),
            pos.phi(),
        ))
    }

    /// Expansion coefficients over the standard harmonics (m_f descending).
    pub(crate) fn coefficients(&self, m: i32) -> [Complex64; 5] {
        chi_row_raw(m, self.alpha, self.phi_axis)
    }
}

/// x′-axis substitution rule: the z′ family with its polar angle replaced by
/// θ′ − π/2 (numerically — no symbolic trig work happens anywhere).
pub fn substitute_x_axis(dir: Direction) -> SubstitutedAxis {
    SubstitutedAxis {
        alpha: dir.theta_prime() - FRAC_PI_2,
        phi_axis: dir.phi_prime(),
    }
}

/// y′-axis substitution rule: polar angle fixed at π/2, azimuth shifted to φ′ − π/2.
/// The resulting family is independent of θ′, as the y′ axis itself is.
pub fn substitute_y_axis(dir: Direction) -> SubstitutedAxis {
    SubstitutedAxis {
        alpha: FRAC_PI_2,
        phi_axis: dir.phi_prime() - FRAC_PI_2,
    }
}

/// Substitution-derived x′ family (see [`substitute_x_axis`]).
pub fn gen_ylm_substitution_x(m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
    substitute_x_axis(dir).eval(m, pos)
}

/// Substitution-derived y′ family (see [`substitute_y_axis`]).
pub fn gen_ylm_substitution_y(m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
    substitute_y_axis(dir).eval(m, pos)
}

/// The x′-family closed forms as tabulated. All five carry the prefactor
/// √(15/128π) as printed — including m = 0, where the substitution route instead
/// yields √(45/256π); the errata report measures that constant ratio (√(2/3))
/// rather than papering over it. Writing S = sinθ′, C = cosθ′, E_k = e^{ik(φ−φ′)},
/// P = 3cos²θ − 1:
///
/// ```text
/// m=+2: √(15/128π)[ ½sin²θ((1+S)²E₂ + (1−S)²E₋₂) + sin2θ·C((1+S)E₁ − (1−S)E₋₁) + C²P ]
/// m=+1: √(15/128π)[ −sin²θ·C((1+S)E₂ − (1−S)E₋₂) − sin2θ((1−2S)(1+S)E₁ + (1+2S)(1−S)E₋₁) + sin2θ′·P ]
/// m= 0: √(15/128π)[ C²sin²θ(E₂ + E₋₂) − sin2θ·sin2θ′(E₁ + E₋₁) + ⅔(2S² − C²)P ]
/// m=−1: √(15/128π)[ −sin²θ·C((1−S)E₂ − (1+S)E₋₂) + sin2θ((1+2S)(1−S)E₁ + (1−2S)(1+S)E₋₁) − sin2θ′·P ]
/// m=−2: √(15/128π)[ ½sin²θ((1−S)²E₂ + (1+S)²E₋₂) − sin2θ·C((1−S)E₁ − (1+S)E₋₁) + C²P ]
/// ```
///
/// The m = −2 source table leaves its bracket unclosed; it is transcribed with the
/// bracket closing after the E₋₂ term, mirroring the m = +2 structure.
pub fn gen_ylm_closed_x(m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
    check_m(m)?;
    let (s_ax, c_ax) = dir.theta_prime().sin_cos();
    let s2_ax = (2.0 * dir.theta_prime()).sin();
    let ct = pos.theta().cos();
    let sin2 = pos.theta().sin().powi(2);
    let s2t = (2.0 * pos.theta()).sin();
    let p = 3.0 * ct * ct - 1.0;
    let e = |k: f64| cis(k * (pos.phi() - dir.phi_prime()));
    let bracket = match m {
        2 => {
            0.5 * sin2 * ((1.0 + s_ax).powi(2) * e(2.0) + (1.0 - s_ax).powi(2) * e(-2.0))
                + s2t * c_ax * ((1.0 + s_ax) * e(1.0) - (1.0 - s_ax) * e(-1.0))
                + c_ax * c_ax * p
        }
        1 => {
            -sin2 * c_ax * ((1.0 + s_ax) * e(2.0) - (1.0 - s_ax) * e(-2.0))
                - s2t
                    * ((1.0 - 2.0 * s_ax) * (1.0 + s_ax) * e(1.0)
                        + (1.0 + 2.0 * s_ax) * (1.0 - s_ax) * e(-1.0))
                + s2_ax * p
        }
        0 => {
            c_ax * c_ax * sin2 * (e(2.0) + e(-2.0)) - s2t * s2_ax * (e(1.0) + e(-1.0))
                + (2.0 / 3.0) * (2.0 * s_ax * s_ax - c_ax * c_ax) * p
        }
        -1 => {
            -sin2 * c_ax * ((1.0 - s_ax) * e(2.0) - (1.0 + s_ax) * e(-2.0))
                + s2t
                    * ((1.0 + 2.0 * s_ax) * (1.0 - s_ax) * e(1.0)
                        + (1.0 - 2.0 * s_ax) * (1.0 + s_ax) * e(-1.0))
                - s2_ax * p
        }
        -2 => {
            0.5 * sin2 * ((1.0 - s_ax).powi(2) * e(2.0) + (1.0 + s_ax).powi(2) * e(-2.0))
                - s2t * c_ax * ((1.0 - s_ax) * e(1.0) - (1.0 + s_ax) * e(-1.0))
                + c_ax * c_ax * p
        }
        _ => unreachable!("callers validate m"),
    };
    Ok(PREF_X * bracket)
}

/// The y′-family closed forms as tabulated. They contain no axis polar angle at
/// all — correctly so, since the y′ axis has none — and carry two quirks the
/// errata report measures: the printed m = +1 form is character-for-character the
/// printed m = −1 form, and the m = −1 form is the negative of the substitution
/// result. Writing E_k = e^{ik(φ−φ′)}, P = 3cos²θ − 1:
///
/// ```text
/// m=+2: −√(15/128π)[ ½sin²θ(E₂ + E₋₂) + i·sin2θ(E₁ + E₋₁) − P ]
/// m=+1:  √(15/128π)[ sin²θ(−E₂ + E₋₂) + i·sin2θ(E₁ − E₋₁) ]
/// m= 0: −√(45/256π)[ sin²θ(E₂ + E₋₂) + ⅔P ]
/// m=−1:  √(15/128π)[ sin²θ(−E₂ + E₋₂) + i·sin2θ(E₁ − E₋₁) ]
/// m=−2:  √(15/128π)[ −½sin²θ(E₂ + E₋₂) + i·sin2θ(E₁ + E₋₁) + P ]
/// ```
pub fn gen_ylm_closed_y(m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
    check_m(m)?;
    let ct = pos.theta().cos();
    let sin2 = pos.theta().sin().powi(2);
    let s2t = (2.0 * pos.theta()).sin();
    let p = 3.0 * ct * ct - 1.0;
    let i = Complex64::new(0.0, 1.0);
    let e = |k: f64| cis(k * (pos.phi() - dir.phi_prime()));
    Ok(match m {
        2 => -PREF_X * (0.5 * sin2 * (e(2.0) + e(-2.0)) + i * s2t * (e(1.0) + e(-1.0)) - p),
        1 => PREF_X * (sin2 * (-e(2.0) + e(-2.0)) + i * s2t * (e(1.0) - e(-1.0))),
        0 => -PREF_Z0 * (sin2 * (e(2.0) + e(-2.0)) + (2.0 / 3.0) * p),
        -1 => PREF_X * (sin2 * (-e(2.0) + e(-2.0)) + i * s2t * (e(1.0) - e(-1.0))),
        -2 => PREF_X * (-0.5 * sin2 * (e(2.0) + e(-2.0)) + i * s2t * (e(1.0) + e(-1.0)) + p),
        _ => unreachable!("callers validate m"),
    })
}

/// The axis a family is quantized along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisVariant {
    ZPrime,
    XPrime,
    YPrime,
}

/// How a family's values are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// Five-term sum over the amplitude table.
    Composed,
    /// The closed-form tables transcribed exactly as tabulated, quirks included.
    PaperClosed,
    /// The z′ code re-evaluated under the axis-substitution rules.
    SubstitutionDerived,
}

/// The seven concrete function families the validation suite measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Standard harmonics Y_{2m}; the axis argument is ignored.
    Standard,
    /// Amplitude-composed generalized harmonics along â.
    Composed,
    /// z′ closed forms (sign-aligned; agrees with `Composed`).
    PaperClosedZ,
    /// x′ closed forms as tabulated.
    PaperClosedX,
    /// y′ closed forms as tabulated.
    PaperClosedY,
    /// x′ family derived by the θ′ → θ′ − π/2 substitution.
    SubstitutionX,
    /// y′ family derived by the θ′ = π/2, φ′ → φ′ − π/2 substitution.
    SubstitutionY,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Standard,
        Family::Composed,
        Family::PaperClosedZ,
        Family::PaperClosedX,
        Family::PaperClosedY,
        Family::SubstitutionX,
        Family::SubstitutionY,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Standard => "standard",
            Family::Composed => "composed",
            Family::PaperClosedZ => "paper-closed-z",
            Family::PaperClosedX => "paper-closed-x",
            Family::PaperClosedY => "paper-closed-y",
            Family::SubstitutionX => "substitution-x",
            Family::SubstitutionY => "substitution-y",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn variant(self) -> AxisVariant {
        match self {
            Family::Standard | Family::Composed | Family::PaperClosedZ => AxisVariant::ZPrime,
            Family::PaperClosedX | Family::SubstitutionX => AxisVariant::XPrime,
            Family::PaperClosedY | Family::SubstitutionY => AxisVariant::YPrime,
        }
    }

    /// `None` for the standard harmonics, which are not generalized at all.
    pub fn source(self) -> Option<Source> {
        match self {
            Family::Standard => None,
            Family::Composed => Some(Source::Composed),
            Family::PaperClosedZ | Family::PaperClosedX | Family::PaperClosedY => {
                Some(Source::PaperClosed)
            }
            Family::SubstitutionX | Family::SubstitutionY => Some(Source::SubstitutionDerived),
        }
    }

    pub fn eval(self, m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
        match self {
            Family::Standard => std_ylm_l2(m, pos),
            Family::Composed => gen_ylm_composed(m, dir, pos),
            Family::PaperClosedZ => gen_ylm_closed_z(m, dir, pos),
            Family::PaperClosedX => gen_ylm_closed_x(m, dir, pos),
            Family::PaperClosedY => gen_ylm_closed_y(m, dir, pos),
            Family::SubstitutionX => gen_ylm_substitution_x(m, dir, pos),
            Family::SubstitutionY => gen_ylm_substitution_y(m, dir, pos),
        }
    }

    /// The (polar, azimuth) angles of the quantization axis this family's members
    /// are eigenfunctions about; the polar value may lie outside [0, π] for the
    /// substituted axes.
    pub fn axis_angles(self, dir: Direction) -> (f64, f64) {
        match self {
            Family::Standard => (0.0, 0.0),
            Family::Composed | Family::PaperClosedZ => (dir.theta_prime(), dir.phi_prime()),
            Family::PaperClosedX | Family::SubstitutionX => {
                let s = substitute_x_axis(dir);
                (s.alpha(), s.phi_axis())
            }
            Family::PaperClosedY | Family::SubstitutionY => {
                let s = substitute_y_axis(dir);
                (s.alpha(), s.phi_axis())
            }
        }
    }

    /// Expansion coefficients of the family member over the standard harmonics
    /// (m_f descending). Amplitude rows where the expansion is analytic; quadrature
    /// projection on `grid` for the as-tabulated x′/y′ forms, which are not exact
    /// amplitude rows.
    pub fn coefficients(
        self,
        m: i32,
        dir: Direction,
        grid: &SphereGrid,
    ) -> Result<[Complex64; 5]> {
        check_m(m)?;
        match self {
            Family::Standard => {
                let mut out = [Complex64::new(0.0, 0.0); 5];
                out[(2 - m) as usize] = Complex64::new(1.0, 0.0);
                Ok(out)
            }
            Family::Composed | Family::PaperClosedZ => {
                Ok(chi_row_raw(m, dir.theta_prime(), dir.phi_prime()))
            }
            Family::SubstitutionX => Ok(substitute_x_axis(dir).coefficients(m)),
            Family::SubstitutionY => Ok(substitute_y_axis(dir).coefficients(m)),
            Family::PaperClosedX | Family::PaperClosedY => {
                let mut out = [Complex64::new(0.0, 0.0); 5];
                for (k, &m_f) in M_VALUES.iter().enumerate() {
                    out[k] = grid.integrate(|pos| {
                        std_ylm_raw(m_f, pos.theta(), pos.phi()).conj()
                            * self
                                .eval(m, dir, pos)
                                .expect("validated m and in-range grid nodes")
                    });
                }
                Ok(out)
            }
        }
    }
}

/// One fully specified scalar function on the sphere: a family, a projection
/// quantum number, and a quantization axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicFamily {
    pub family: Family,
    pub m: i32,
    pub dir: Direction,
}

impl HarmonicFamily {
    pub fn new(family: Family, m: i32, dir: Direction) -> Result<Self> {
        check_m(m)?;
        Ok(Self { family, m, dir })
    }

    pub fn eval(&self, pos: AngularPosition) -> Result<Complex64> {
        self.family.eval(self.m, self.dir, pos)
    }

    pub fn variant(&self) -> AxisVariant {
        self.family.variant()
    }

    pub fn source(&self) -> Option<Source> {
        self.family.source()
    }
}
