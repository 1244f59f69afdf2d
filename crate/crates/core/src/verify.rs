//! The verification battery: quadrature inner products and Gram matrices,
//! amplitude unitarity, parity and sum-rule checks, the angular-momentum operator
//! along an arbitrary axis, eigenvalue residuals, and seeded sampling helpers.
//!
//! Everything here *measures* rather than assumes: the same report types are used
//! both for the families expected to pass and for the as-tabulated families whose
//! defects the errata machinery quantifies.

use crate::amplitudes::{check_m, chi_matrix, chi_row};
use crate::harmonics::{combine, gen_ylm_closed_z, gen_ylm_composed, std_ylm_dtheta_raw, std_ylm_raw, Family};
use crate::quadrature::SphereGrid;
use crate::types::{AngularPosition, Complex64, Direction, Error, HalfInt, Result, M_VALUES};
use crate::wigner::rotation_coefficients;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

/// Polar-angle margin inside which the axis operator refuses to evaluate:
/// its cotθ coefficient makes the poles genuinely singular.
pub const POLE_MARGIN: f64 = 1e-9;

/// 5/(4π) — the direction-independent value of Σ_m |Y(2, m^(â); θ, φ)|²,
/// i.e. (2l + 1)/(4π) at l = 2.
pub const SUM_RULE_DENSITY: f64 = 0.397_887_357_729_738_4;

/// ⟨f, g⟩ = Σ_k w_k · conj(f(x_k)) · g(x_k) over the quadrature grid, with the
/// physics convention (conjugation on the first slot).
pub fn inner_product<F, G>(mut f: F, mut g: G, grid: &SphereGrid) -> Result<Complex64>
where
    F: FnMut(AngularPosition) -> Result<Complex64>,
    G: FnMut(AngularPosition) -> Result<Complex64>,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for (pos, w) in grid.iter() {
        let fv = f(pos)?;
        let gv = g(pos)?;
        for v in [fv, gv] {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteSample {
                    value: v,
                    theta: pos.theta(),
                    phi: pos.phi(),
                });
            }
        }
        acc += w * fv.conj() * gv;
    }
    Ok(acc)
}

/// Gram matrix of one family's five members against each other, with its worst
/// departures from the identity broken out.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoReport {
    pub family: Family,
    pub dir: Direction,
    pub n_theta: usize,
    pub n_phi: usize,
    /// gram[a][b] = ⟨member m_a, member m_b⟩, rows/columns ordered m = +2 … −2.
    pub gram: [[Complex64; 5]; 5],
    pub max_off_diagonal: f64,
    pub max_diagonal_deviation: f64,
}

impl OrthoReport {
    /// Worst departure from the 5×5 identity.
    pub fn max_deviation(&self) -> f64 {
        self.max_off_diagonal.max(self.max_diagonal_deviation)
    }
}

/// Computes the full 5×5 Gram matrix of `family` at axis `dir` on `grid`.
/// Each node is evaluated once per member, not once per matrix entry.
pub fn orthonormality_report(
    family: Family,
    dir: Direction,
    grid: &SphereGrid,
) -> Result<OrthoReport> {
    let mut gram = [[Complex64::new(0.0, 0.0); 5]; 5];
    for (pos, w) in grid.iter() {
        let mut vals = [Complex64::new(0.0, 0.0); 5];
        for (k, &m) in M_VALUES.iter().enumerate() {
            let v = family.eval(m, dir, pos)?;
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteSample {
                    value: v,
                    theta: pos.theta(),
                    phi: pos.phi(),
                });
            }
            vals[k] = v;
        }
        for a in 0..5 {
            for b in 0..5 {
                gram[a][b] += w * vals[a].conj() * vals[b];
            }
        }
    }
    let mut max_off_diagonal = 0.0f64;
    let mut max_diagonal_deviation = 0.0f64;
    for a in 0..5 {
        for b in 0..5 {
            if a == b {
                max_diagonal_deviation =
                    max_diagonal_deviation.max((gram[a][a] - 1.0).norm());
            } else {
                max_off_diagonal = max_off_diagonal.max(gram[a][b].norm());
            }
        }
    }
    Ok(OrthoReport {
        family,
        dir,
        n_theta: grid.n_theta(),
        n_phi: grid.n_phi(),
        gram,
        max_off_diagonal,
        max_diagonal_deviation,
    })
}

/// ‖χ†χ − I‖_max for the amplitude matrix at `dir`.
pub fn unitarity_check(dir: Direction) -> f64 {
    chi_matrix(dir).unitarity_deviation()
}

/// Worst entrywise disagreement between the closed-form l = 2 amplitude table and
/// the general-j rotation oracle at the same axis.
pub fn oracle_deviation(dir: Direction) -> Result<f64> {
    let hand = chi_matrix(dir);
    let oracle = rotation_coefficients(HalfInt::from_int(2), dir)?;
    Ok(hand.max_abs_diff(&oracle))
}

/// Worst disagreement between the z′ closed forms and the amplitude composition,
/// over all five m and every sample point.
pub fn composition_deviation(dir: Direction, sample: &[AngularPosition]) -> Result<f64> {
    let mut worst = 0.0f64;
    for m in M_VALUES {
        for &pos in sample {
            let closed = gen_ylm_closed_z(m, dir, pos)?;
            let composed = gen_ylm_composed(m, dir, pos)?;
            worst = worst.max((closed - composed).norm());
        }
    }
    Ok(worst)
}

/// Worst disagreement of the composed and z′-closed families against the standard
/// harmonics when the axis degenerates to z (θ′ = φ′ = 0).
pub fn limit_deviation(sample: &[AngularPosition]) -> Result<f64> {
    let z = Direction::z_axis();
    let mut worst = 0.0f64;
    for m in M_VALUES {
        for &pos in sample {
            let reference = std_ylm_raw(m, pos.theta(), pos.phi());
            let composed = gen_ylm_composed(m, z, pos)?;
            let closed = gen_ylm_closed_z(m, z, pos)?;
            worst = worst.max((composed - reference).norm());
            worst = worst.max((closed - reference).norm());
        }
    }
    Ok(worst)
}

/// Worst violation of evenness under (θ, φ) → (π − θ, φ + π) across all five
/// members of `family`, over the sample.
pub fn parity_check(family: Family, dir: Direction, sample: &[AngularPosition]) -> Result<f64> {
    let mut worst = 0.0f64;
    for m in M_VALUES {
        for &pos in sample {
            let v = family.eval(m, dir, pos)?;
            let w = family.eval(m, dir, pos.parity_image())?;
            worst = worst.max((v - w).norm());
        }
    }
    Ok(worst)
}

/// Worst pointwise violation of Σ_m |f_m|² = 5/(4π) over the sample.
pub fn sum_rule_deviation(
    family: Family,
    dir: Direction,
    sample: &[AngularPosition],
) -> Result<f64> {
    let mut worst = 0.0f64;
    for &pos in sample {
        let total: f64 = M_VALUES
            .iter()
            .map(|&m| family.eval(m, dir, pos).map(|v| v.norm_sqr()))
            .sum::<Result<f64>>()?;
        worst = worst.max((total - SUM_RULE_DENSITY).abs());
    }
    Ok(worst)
}

/// Applies the angular-momentum component along the axis with polar angle `alpha`
/// and azimuth `phi_axis` (ħ = 1),
///
/// ```text
/// L_â = i { sinα sin(φ − φ_a) ∂_θ + [ sinα cotθ cos(φ − φ_a) − cosα ] ∂_φ }
/// ```
///
/// to the function Σ_f coeffs[f]·Y_{2,m_f}, using the closed-form derivatives of
/// the standard harmonics (∂_φ brings down i·m_f per term). Errors inside
/// [`POLE_MARGIN`] of either pole, where cotθ blows up.
pub fn apply_axis_operator(
    coeffs: &[Complex64; 5],
    alpha: f64,
    phi_axis: f64,
    pos: AngularPosition,
) -> Result<Complex64> {
    let theta = pos.theta();
    if theta < POLE_MARGIN || theta > PI - POLE_MARGIN {
        return Err(Error::PoleProximity {
            theta,
            margin: POLE_MARGIN,
        });
    }
    let phi = pos.phi();
    let (sa, ca) = alpha.sin_cos();
    let cot = theta.cos() / theta.sin();
    let mut f_theta = Complex64::new(0.0, 0.0);
    let mut f_phi = Complex64::new(0.0, 0.0);
    for (k, &m_f) in M_VALUES.iter().enumerate() {
        f_theta += coeffs[k] * std_ylm_dtheta_raw(m_f, theta, phi);
        f_phi += coeffs[k] * Complex64::new(0.0, m_f as f64) * std_ylm_raw(m_f, theta, phi);
    }
    let (s_rel, c_rel) = (phi - phi_axis).sin_cos();
    Ok(Complex64::new(0.0, 1.0) * (sa * s_rel * f_theta + (sa * cot * c_rel - ca) * f_phi))
}

/// L_â applied to the composed generalized harmonic of projection m along `dir`.
/// The defining eigen-identity is L_â Y(2, m^(â)) = m · Y(2, m^(â)).
#[allow(non_snake_case)]
pub fn apply_L_a(m: i32, dir: Direction, pos: AngularPosition) -> Result<Complex64> {
    let coeffs = chi_row(m, dir)?;
    apply_axis_operator(&coeffs, dir.theta_prime(), dir.phi_prime(), pos)
}

/// Same operator, but with both partial derivatives replaced by central finite
/// differences of step `h` — an independent cross-check on the closed-form
/// derivative path. Errors within max([`POLE_MARGIN`], h) of either pole.
#[allow(non_snake_case)]
pub fn apply_L_a_fd(m: i32, dir: Direction, pos: AngularPosition, h: f64) -> Result<Complex64> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::NonFiniteAngle { value: h });
    }
    let theta = pos.theta();
    let margin = POLE_MARGIN.max(h);
    if theta < margin || theta > PI - margin {
        return Err(Error::PoleProximity { theta, margin });
    }
    let phi = pos.phi();
    let coeffs = chi_row(m, dir)?;
    let f_theta = (combine(&coeffs, theta + h, phi) - combine(&coeffs, theta - h, phi))
        / Complex64::new(2.0 * h, 0.0);
    let f_phi = (combine(&coeffs, theta, phi + h) - combine(&coeffs, theta, phi - h))
        / Complex64::new(2.0 * h, 0.0);
    let (sa, ca) = dir.theta_prime().sin_cos();
    let cot = theta.cos() / theta.sin();
    let (s_rel, c_rel) = (phi - dir.phi_prime()).sin_cos();
    Ok(Complex64::new(0.0, 1.0) * (sa * s_rel * f_theta + (sa * cot * c_rel - ca) * f_phi))
}

/// Worst eigenvalue residual of one family member over a point sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenReport {
    pub family: Family,
    pub m: i32,
    pub dir: Direction,
    /// max over used points of |L_â f − m·f|.
    pub max_residual: f64,
    pub samples_used: usize,
    /// Points discarded for sitting inside the pole margin.
    pub samples_skipped: usize,
}

/// Measures max |L_â f − m·f| for `family`'s projection-m member over `sample`.
/// The operator acts on the family's coefficient expansion (exact for every
/// family here, since all of them live in the five-dimensional l = 2 space);
/// `grid` is consulted only when the expansion must be obtained by projection.
/// Points inside the pole margin are skipped and counted, never silently dropped.
pub fn eigen_residual(
    family: Family,
    m: i32,
    dir: Direction,
    sample: &[AngularPosition],
    grid: &SphereGrid,
) -> Result<EigenReport> {
    let coeffs = family.coefficients(m, dir, grid)?;
    let (alpha, phi_axis) = family.axis_angles(dir);
    let mut max_residual = 0.0f64;
    let mut used = 0usize;
    let mut skipped = 0usize;
    for &pos in sample {
        if pos.theta() < POLE_MARGIN || pos.theta() > PI - POLE_MARGIN {
            skipped += 1;
            continue;
        }
        let lf = apply_axis_operator(&coeffs, alpha, phi_axis, pos)?;
        let f = combine(&coeffs, pos.theta(), pos.phi());
        max_residual = max_residual.max((lf - m as f64 * f).norm());
        used += 1;
    }
    Ok(EigenReport {
        family,
        m,
        dir,
        max_residual,
        samples_used: used,
        samples_skipped: skipped,
    })
}

/// Worst disagreement between the closed-form and finite-difference operator
/// applications for the composed family, over all five m and the sample.
pub fn derivative_cross_check(
    dir: Direction,
    sample: &[AngularPosition],
    h: f64,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for m in M_VALUES {
        check_m(m)?;
        for &pos in sample {
            let analytic = apply_L_a(m, dir, pos)?;
            let fd = apply_L_a_fd(m, dir, pos, h)?;
            worst = worst.max((analytic - fd).norm());
        }
    }
    Ok(worst)
}

/// `count` quantization axes drawn uniformly on the sphere (cosθ′ uniform in
/// [−1, 1], φ′ uniform in [0, 2π)), deterministically from `seed`.
pub fn sample_directions(count: usize, seed: u64) -> Vec<Direction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u: f64 = rng.gen_range(-1.0..=1.0);
            let phi: f64 = rng.gen_range(0.0..TAU);
            Direction::new(u.acos(), phi).expect("acos lands in [0, π]")
        })
        .collect()
}

/// `count` evaluation points drawn uniformly with cosθ confined to
/// [−0.999, 0.999], keeping every point clear of the operator's pole margin.
pub fn sample_positions(count: usize, seed: u64) -> Vec<AngularPosition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u: f64 = rng.gen_range(-0.999..=0.999);
            let phi: f64 = rng.gen_range(0.0..TAU);
            AngularPosition::new(u.acos(), phi).expect("acos lands in [0, π]")
        })
        .collect()
}
