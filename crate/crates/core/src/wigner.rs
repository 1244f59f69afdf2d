//! General-j Wigner rotation machinery: the small-d matrix through its explicit
//! finite-sum formula, and the rotation-coefficient matrix that serves as the
//! independent brute-force oracle for the hand-written l = 2 amplitude table.

use crate::types::{cis, AmplitudeMatrix, Direction, Error, HalfInt, Result};
use std::sync::LazyLock;

/// Largest supported 2j. 32 keeps every factorial in the sum well inside f64 range.
const MAX_TWO_J: i32 = 32;

static FACTORIALS: LazyLock<[f64; 65]> = LazyLock::new(|| {
    let mut table = [1.0f64; 65];
    for k in 1..table.len() {
        table[k] = table[k - 1] * k as f64;
    }
    table
});

fn fact(n: i32) -> f64 {
    FACTORIALS[n as usize]
}

fn check_j(j: HalfInt) -> Result<()> {
    if j.twice() < 0 || j.twice() > MAX_TWO_J {
        return Err(Error::TotalAngularMomentum { j });
    }
    Ok(())
}

fn check_projection(j: HalfInt, m: HalfInt) -> Result<()> {
    if (j.twice() - m.twice()) % 2 != 0 || m.twice().abs() > j.twice() {
        return Err(Error::ProjectionOutOfRange { j, m });
    }
    Ok(())
}

/// Wigner small-d matrix element d^j_{m_to, m_from}(β), evaluated through the
/// explicit sum
///
/// ```text
/// d^j_{m′,m}(β) = Σ_s (−1)^{m′−m+s} √[(j+m′)!(j−m′)!(j+m)!(j−m)!]
///                 / [(j+m−s)!·s!·(m′−m+s)!·(j−m′−s)!]
///                 · cos(β/2)^{2j+m−m′−2s} · sin(β/2)^{m′−m+2s}
/// ```
///
/// with m = m_from, m′ = m_to, and s running over every value that keeps all four
/// factorial arguments non-negative. The result is exactly real.
pub fn small_d(j: HalfInt, m_from: HalfInt, m_to: HalfInt, beta: f64) -> Result<f64> {
    check_j(j)?;
    check_projection(j, m_from)?;
    check_projection(j, m_to)?;
    if !beta.is_finite() {
        return Err(Error::NonFiniteAngle { value: beta });
    }

    let jp_from = (j.twice() + m_from.twice()) / 2; // j + m_from
    let jm_from = (j.twice() - m_from.twice()) / 2; // j − m_from
    let jp_to = (j.twice() + m_to.twice()) / 2; // j + m_to
    let jm_to = (j.twice() - m_to.twice()) / 2; // j − m_to
    let delta = (m_to.twice() - m_from.twice()) / 2; // m_to − m_from (always integral)

    let prefactor = (fact(jp_to) * fact(jm_to) * fact(jp_from) * fact(jm_from)).sqrt();
    let half = beta / 2.0;
    let (sin_half, cos_half) = half.sin_cos();

    let s_min = 0.max(-delta);
    let s_max = jp_from.min(jm_to);
    let mut sum = 0.0;
    for s in s_min..=s_max {
        let sign = if (delta + s) % 2 == 0 { 1.0 } else { -1.0 };
        let denom = fact(jp_from - s) * fact(s) * fact(delta + s) * fact(jm_to - s);
        let cos_pow = j.twice() - delta - 2 * s;
        let sin_pow = delta + 2 * s;
        sum += sign * cos_half.powi(cos_pow) * sin_half.powi(sin_pow) / denom;
    }
    Ok(prefactor * sum)
}

/// The (2j+1)×(2j+1) matrix whose (m_i, m_f) entry is the probability amplitude
/// connecting projection m_i along `dir` to projection m_f along z:
///
/// ```text
/// entry(m_i, m_f) = e^{−i·m_f·φ′} · d^j_{m_f, m_i}(θ′)
/// ```
///
/// Unitary for every direction; the identity at θ′ = φ′ = 0.
pub fn rotation_coefficients(j: HalfInt, dir: Direction) -> Result<AmplitudeMatrix> {
    check_j(j)?;
    let mut matrix = AmplitudeMatrix::zero(j);
    let dim = matrix.dim();
    for i in 0..dim {
        let m_i = matrix.m_at(i);
        for k in 0..dim {
            let m_f = matrix.m_at(k);
            let d = small_d(j, m_i, m_f, dir.theta_prime())?;
            matrix.set(m_i, m_f, cis(-m_f.to_f64() * dir.phi_prime()) * d);
        }
    }
    Ok(matrix)
}
