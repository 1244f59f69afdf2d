//! The 25 explicit spin-2 probability amplitudes χ(m_i, m_f) for a quantization
//! axis â = (θ′, φ′): χ(m_i, m_f) is the amplitude for measuring projection m_f·ħ
//! along z given projection m_i·ħ along â, and equals e^{−i·m_f·φ′}·d²_{m_f,m_i}(θ′).
//!
//! Each amplitude is one closed-form function of the half-angle trig of θ′, kept as
//! a separate source function so a transcription slip localizes immediately. The
//! whole table is checked entrywise against the general-j machinery in [`crate::wigner`].

use crate::types::{cis, AmplitudeMatrix, Complex64, Direction, Error, HalfInt, Result, M_VALUES};

const SQRT_6: f64 = 2.449489742783178;

pub(crate) fn check_m(m: i32) -> Result<()> {
    if (-2..=2).contains(&m) {
        Ok(())
    } else {
        Err(Error::MOutOfRange { m })
    }
}

/// χ(+2, +2) = cos⁴(θ′/2) · e^{−2iφ′}
fn chi_2_2(tp: f64, pp: f64) -> Complex64 {
    let c = (tp / 2.0).cos();
    c.powi(4) * cis(-2.0 * pp)
}

/// χ(+2, +1) = 2 sin(θ′/2) cos³(θ′/2) · e^{−iφ′}
fn chi_2_1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    2.0 * s * c.powi(3) * cis(-pp)
}

/// χ(+2, 0) = √6 sin²(θ′/2) cos²(θ′/2)
fn chi_2_0(tp: f64, _pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    Complex64::new(SQRT_6 * s * s * c * c, 0.0)
}

/// χ(+2, −1) = 2 sin³(θ′/2) cos(θ′/2) · e^{iφ′}
fn chi_2_m1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    2.0 * s.powi(3) * c * cis(pp)
}

/// χ(+2, −2) = sin⁴(θ′/2) · e^{2iφ′}
fn chi_2_m2(tp: f64, pp: f64) -> Complex64 {
    let s = (tp / 2.0).sin();
    s.powi(4) * cis(2.0 * pp)
}

/// χ(+1, +2) = −2 sin(θ′/2) cos³(θ′/2) · e^{−2iφ′}
fn chi_1_2(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    -2.0 * s * c.powi(3) * cis(-2.0 * pp)
}

/// χ(+1, +1) = −(3 sin²(θ′/2) − cos²(θ′/2)) cos²(θ′/2) · e^{−iφ′}
fn chi_1_1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    -(3.0 * s * s - c * c) * c * c * cis(-pp)
}

/// χ(+1, 0) = √6 sin(θ′/2) cos(θ′/2) cosθ′
fn chi_1_0(tp: f64, _pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    Complex64::new(SQRT_6 * s * c * tp.cos(), 0.0)
}

/// χ(+1, −1) = (3 cos²(θ′/2) − sin²(θ′/2)) sin²(θ′/2) · e^{iφ′}
fn chi_1_m1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    (3.0 * c * c - s * s) * s * s * cis(pp)
}

/// χ(+1, −2) = 2 sin³(θ′/2) cos(θ′/2) · e^{2iφ′}
fn chi_1_m2(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    2.0 * s.powi(3) * c * cis(2.0 * pp)
}

/// χ(0, +2) = √6 sin²(θ′/2) cos²(θ′/2) · e^{−2iφ′}
fn chi_0_2(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    SQRT_6 * s * s * c * c * cis(-2.0 * pp)
}

/// χ(0, +1) = −√6 sin(θ′/2) cos(θ′/2) cosθ′ · e^{−iφ′}
fn chi_0_1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    -SQRT_6 * s * c * tp.cos() * cis(-pp)
}

/// χ(0, 0) = (2 cos²θ′ − sin²θ′) / 2
fn chi_0_0(tp: f64, _pp: f64) -> Complex64 {
    let (st, ct) = tp.sin_cos();
    Complex64::new(0.5 * (2.0 * ct * ct - st * st), 0.0)
}

/// χ(0, −1) = √6 sin(θ′/2) cos(θ′/2) cosθ′ · e^{iφ′}
fn chi_0_m1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    SQRT_6 * s * c * tp.cos() * cis(pp)
}

/// χ(0, −2) = √6 sin²(θ′/2) cos²(θ′/2) · e^{2iφ′}
fn chi_0_m2(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    SQRT_6 * s * s * c * c * cis(2.0 * pp)
}

/// χ(−1, +2) = −2 sin³(θ′/2) cos(θ′/2) · e^{−2iφ′}
fn chi_m1_2(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    -2.0 * s.powi(3) * c * cis(-2.0 * pp)
}

/// χ(−1, +1) = (3 cos²(θ′/2) − sin²(θ′/2)) sin²(θ′/2) · e^{−iφ′}
fn chi_m1_1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    (3.0 * c * c - s * s) * s * s * cis(-pp)
}

/// χ(−1, 0) = −√6 sin(θ′/2) cos(θ′/2) cosθ′
fn chi_m1_0(tp: f64, _pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    Complex64::new(-SQRT_6 * s * c * tp.cos(), 0.0)
}

/// χ(−1, −1) = −(3 sin²(θ′/2) − cos²(θ′/2)) cos²(θ′/2) · e^{iφ′}
fn chi_m1_m1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    -(3.0 * s * s - c * c) * c * c * cis(pp)
}

/// χ(−1, −2) = 2 sin(θ′/2) cos³(θ′/2) · e^{2iφ′}
fn chi_m1_m2(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    2.0 * s * c.powi(3) * cis(2.0 * pp)
}

/// χ(−2, +2) = sin⁴(θ′/2) · e^{−2iφ′}
fn chi_m2_2(tp: f64, pp: f64) -> Complex64 {
    let s = (tp / 2.0).sin();
    s.powi(4) * cis(-2.0 * pp)
}

/// χ(−2, +1) = −2 sin³(θ′/2) cos(θ′/2) · e^{−iφ′}
fn chi_m2_1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    -2.0 * s.powi(3) * c * cis(-pp)
}

/// χ(−2, 0) = √6 sin²(θ′/2) cos²(θ′/2)
fn chi_m2_0(tp: f64, _pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    Complex64::new(SQRT_6 * s * s * c * c, 0.0)
}

/// χ(−2, −1) = −2 sin(θ′/2) cos³(θ′/2) · e^{iφ′}
fn chi_m2_m1(tp: f64, pp: f64) -> Complex64 {
    let (s, c) = (tp / 2.0).sin_cos();
    -2.0 * s * c.powi(3) * cis(pp)
}

/// χ(−2, −2) = cos⁴(θ′/2) · e^{2iφ′}
fn chi_m2_m2(tp: f64, pp: f64) -> Complex64 {
    let c = (tp / 2.0).cos();
    c.powi(4) * cis(2.0 * pp)
}

/// One amplitude row for initial projection m_i, columns m_f = +2, +1, 0, −1, −2,
/// evaluated at raw axis angles (no range validation — the polar argument may leave
/// [0, π], which the axis-substitution rules in [`crate::harmonics`] rely on).
pub(crate) fn chi_row_raw(m_i: i32, axis_polar: f64, axis_azimuth: f64) -> [Complex64; 5] {
    let (tp, pp) = (axis_polar, axis_azimuth);
    match m_i {
        2 => [
            chi_2_2(tp, pp),
            chi_2_1(tp, pp),
            chi_2_0(tp, pp),
            chi_2_m1(tp, pp),
            chi_2_m2(tp, pp),
        ],
        1 => [
            chi_1_2(tp, pp),
            chi_1_1(tp, pp),
            chi_1_0(tp, pp),
            chi_1_m1(tp, pp),
            chi_1_m2(tp, pp),
        ],
        0 => [
            chi_0_2(tp, pp),
            chi_0_1(tp, pp),
            chi_0_0(tp, pp),
            chi_0_m1(tp, pp),
            chi_0_m2(tp, pp),
        ],
        -1 => [
            chi_m1_2(tp, pp),
            chi_m1_1(tp, pp),
            chi_m1_0(tp, pp),
            chi_m1_m1(tp, pp),
            chi_m1_m2(tp, pp),
        ],
        -2 => [
            chi_m2_2(tp, pp),
            chi_m2_1(tp, pp),
            chi_m2_0(tp, pp),
            chi_m2_m1(tp, pp),
            chi_m2_m2(tp, pp),
        ],
        _ => unreachable!("callers validate m_i"),
    }
}

/// χ(m_i, m_f) for the axis `dir`. Errors if either projection is outside −2..=2.
pub fn chi(m_i: i32, m_f: i32, dir: Direction) -> Result<Complex64> {
    check_m(m_i)?;
    check_m(m_f)?;
    let row = chi_row_raw(m_i, dir.theta_prime(), dir.phi_prime());
    Ok(row[(2 - m_f) as usize])
}

/// The full amplitude row for initial projection m_i (columns m_f descending).
pub fn chi_row(m_i: i32, dir: Direction) -> Result<[Complex64; 5]> {
    check_m(m_i)?;
    Ok(chi_row_raw(m_i, dir.theta_prime(), dir.phi_prime()))
}

/// The full 5×5 amplitude matrix; unitary, and the identity at θ′ = φ′ = 0.
pub fn chi_matrix(dir: Direction) -> AmplitudeMatrix {
    let mut matrix = AmplitudeMatrix::zero(HalfInt::from_int(2));
    for &m_i in &M_VALUES {
        let row = chi_row_raw(m_i, dir.theta_prime(), dir.phi_prime());
        for (k, &m_f) in M_VALUES.iter().enumerate() {
            matrix.set(HalfInt::from_int(m_i), HalfInt::from_int(m_f), row[k]);
        }
    }
    matrix
}

/// The m_i = ±1 amplitude rows in their originally tabulated form. These differ
/// from [`chi_row`]: the m_i = +1 row reverses the sign of its m_f = +2, 0, −2
/// entries, and the m_i = −1 row reverses the sign of all five. As a set the
/// tabulated rows are not mutually orthogonal (the two rows coincide at θ′ = π/2),
/// so they cannot be part of a unitary amplitude matrix; they are retained solely
/// so the errata report can measure them. For |m_i| ≠ 1 this returns [`chi_row`].
pub fn tabulated_variant_row(m_i: i32, dir: Direction) -> Result<[Complex64; 5]> {
    check_m(m_i)?;
    let (tp, pp) = (dir.theta_prime(), dir.phi_prime());
    let (s, c) = (tp / 2.0).sin_cos();
    match m_i {
        // [2sc³e^{−2iφ′}, −(3s²−c²)c²e^{−iφ′}, −√6·s·c·cosθ′, (3c²−s²)s²e^{iφ′}, −2s³c·e^{2iφ′}]
        1 => Ok([
            2.0 * s * c.powi(3) * cis(-2.0 * pp),
            -(3.0 * s * s - c * c) * c * c * cis(-pp),
            Complex64::new(-SQRT_6 * s * c * tp.cos(), 0.0),
            (3.0 * c * c - s * s) * s * s * cis(pp),
            -2.0 * s.powi(3) * c * cis(2.0 * pp),
        ]),
        // [2cs³e^{−2iφ′}, −(3c²−s²)s²e^{−iφ′}, √6·s·c·cosθ′, (3s²−c²)c²e^{iφ′}, −2sc³e^{2iφ′}]
        -1 => Ok([
            2.0 * c * s.powi(3) * cis(-2.0 * pp),
            -(3.0 * c * c - s * s) * s * s * cis(-pp),
            Complex64::new(SQRT_6 * s * c * tp.cos(), 0.0),
            (3.0 * s * s - c * c) * c * c * cis(pp),
            -2.0 * s * c.powi(3) * cis(2.0 * pp),
        ]),
        _ => chi_row(m_i, dir),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wigner::rotation_coefficients;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn dir(theta: f64, phi: f64) -> Direction {
        Direction::new(theta, phi).unwrap()
    }

    #[test]
    fn rejects_out_of_range_projections() {
        assert!(matches!(
            chi(3, 0, Direction::z_axis()),
            Err(Error::MOutOfRange { m: 3 })
        ));
        assert!(matches!(
            chi(0, -3, Direction::z_axis()),
            Err(Error::MOutOfRange { m: -3 })
        ));
        assert!(chi_row(5, Direction::z_axis()).is_err());
    }

    #[test]
    fn tabulated_point_values() {
        // Hand-substituted values at simple angles.
        let cases = [
            (2, 2, 0.0, 0.0, 1.0),                     // cos⁴(0) = 1
            (2, 0, FRAC_PI_2, 0.0, 0.6123724356957945), // √6·(1/2)·(1/2) = √6/4
            (1, 1, FRAC_PI_2, 0.0, -0.5),              // −(3/2 − 1/2)·1/2
            (0, 0, FRAC_PI_2, 0.0, -0.5),              // (0 − 1)/2
        ];
        for (m_i, m_f, tp, pp, expected) in cases {
            let v = chi(m_i, m_f, dir(tp, pp)).unwrap();
            assert!(
                (v - expected).norm() < 1e-15,
                "chi({m_i}, {m_f}) at ({tp}, {pp}): got {v}"
            );
        }
    }

    #[test]
    fn matrix_is_identity_on_the_z_axis() {
        assert!(chi_matrix(Direction::z_axis()).identity_deviation() < 1e-15);
    }

    #[test]
    fn matrix_at_antipodal_axis_is_the_expected_anti_diagonal() {
        // At θ′ = π each row keeps exactly one entry, on the anti-diagonal,
        // with signs (+1, −1, +1, −1, +1) for rows m_i = (2, 1, 0, −1, −2)
        // as forced by unitarity (d²_{−m,m}(π) = (−1)^{2−m}).
        let m = chi_matrix(dir(PI, 0.0));
        for (i, &m_i) in M_VALUES.iter().enumerate() {
            for (k, &m_f) in M_VALUES.iter().enumerate() {
                let v = m.get(HalfInt::from_int(m_i), HalfInt::from_int(m_f));
                let expected = if k == 4 - i {
                    if m_i % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    }
                } else {
                    0.0
                };
                assert!((v - expected).norm() < 1e-15, "entry ({m_i}, {m_f}) = {v}");
            }
        }
    }

    #[test]
    fn matrix_is_unitary_with_unit_row_norms() {
        for i in 0..50 {
            let d = dir(PI * (i as f64 + 0.5) / 50.0, 0.13 * i as f64);
            let m = chi_matrix(d);
            assert!(m.unitarity_deviation() < 1e-12);
            for &m_i in &M_VALUES {
                let norm: f64 = m
                    .row(HalfInt::from_int(m_i))
                    .iter()
                    .map(|v| v.norm_sqr())
                    .sum();
                assert!((norm - 1.0).abs() < 1e-12, "row {m_i} norm {norm}");
            }
        }
    }

    #[test]
    fn matches_the_general_j_machinery() {
        for i in 0..50 {
            let d = dir(PI * (i as f64 + 0.5) / 50.0, 0.29 * i as f64);
            let oracle = rotation_coefficients(HalfInt::from_int(2), d).unwrap();
            assert!(chi_matrix(d).max_abs_diff(&oracle) < 1e-13);
        }
    }

    #[test]
    fn tabulated_variant_rows_differ_exactly_where_documented() {
        let d = dir(1.1, 0.7);
        let plus = tabulated_variant_row(1, d).unwrap();
        let minus = tabulated_variant_row(-1, d).unwrap();
        let plus_ref = chi_row(1, d).unwrap();
        let minus_ref = chi_row(-1, d).unwrap();
        for (k, &m_f) in M_VALUES.iter().enumerate() {
            let plus_sign = if m_f % 2 == 0 { -1.0 } else { 1.0 };
            assert!(
                (plus[k] - plus_sign * plus_ref[k]).norm() < 1e-15,
                "row +1, m_f = {m_f}"
            );
            assert!((minus[k] + minus_ref[k]).norm() < 1e-15, "row −1, m_f = {m_f}");
        }
        // Unchanged rows pass through.
        let two = tabulated_variant_row(2, d).unwrap();
        assert_eq!(two, chi_row(2, d).unwrap());
    }

    #[test]
    fn tabulated_variant_rows_are_not_orthogonal() {
        // At θ′ = π/2 the two tabulated rows coincide, so their overlap has
        // modulus 1 where orthogonality demands 0.
        let d = dir(FRAC_PI_2, 0.3);
        let plus = tabulated_variant_row(1, d).unwrap();
        let minus = tabulated_variant_row(-1, d).unwrap();
        let overlap: Complex64 = plus
            .iter()
            .zip(&minus)
            .map(|(a, b)| a.conj() * b)
            .sum();
        assert!((overlap.norm() - 1.0).abs() < 1e-12);
    }
}
