//! Quadrature grids on the sphere, exact for the polynomial/Fourier content of
//! l ≤ 2 harmonics: Gauss–Legendre in cosθ crossed with a periodic trapezoid in φ.

use crate::types::{AngularPosition, Error, Result};
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

/// (P_n(x), P_n′(x)) via the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    // P_n′(x) = n (x P_n − P_{n−1}) / (x² − 1); Newton never evaluates at x = ±1.
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Standard n-point Gauss–Legendre rule on [−1, 1]: abscissas in ascending order
/// and their weights. Exact for polynomials of degree ≤ 2n−1; roots located by
/// Newton iteration to |Δx| ≤ 1e-15.
pub fn gauss_legendre_nodes(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::EmptyQuadrature);
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    // The rule is symmetric about 0; solve the upper half and mirror.
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        let hi = n - 1 - i;
        if i == hi {
            // Middle root of an odd rule is exactly 0.
            nodes[i] = 0.0;
        } else {
            nodes[hi] = x;
            nodes[i] = -x;
        }
        weights[i] = w;
        weights[hi] = w;
    }
    Ok((nodes, weights))
}

/// Tensor quadrature grid over the full solid angle: Gauss–Legendre in cosθ ×
/// equal-weight periodic trapezoid in φ (step 2π/n_phi). The trapezoid in φ is
/// spectrally exact for trigonometric polynomials of degree < n_phi, so n_phi ≥ 6
/// integrates every product of two l ≤ 2 harmonics exactly.
///
/// Nodes are stored row-major with θ outermost, in a fixed deterministic order;
/// all integrations sum in that order so results are reproducible bit-for-bit.
#[derive(Debug, Clone)]
pub struct SphereGrid {
    nodes: Vec<AngularPosition>,
    weights: Vec<f64>,
    n_theta: usize,
    n_phi: usize,
}

/// Builds the (n_theta × n_phi) grid. Total weight is 4π by construction.
pub fn sphere_grid(n_theta: usize, n_phi: usize) -> Result<SphereGrid> {
    if n_theta == 0 || n_phi == 0 {
        return Err(Error::EmptyQuadrature);
    }
    let (xs, ws) = gauss_legendre_nodes(n_theta)?;
    let phi_weight = TAU / n_phi as f64;
    let mut nodes = Vec::with_capacity(n_theta * n_phi);
    let mut weights = Vec::with_capacity(n_theta * n_phi);
    for (x, w) in xs.iter().zip(&ws) {
        let theta = x.acos();
        for j in 0..n_phi {
            let phi = TAU * j as f64 / n_phi as f64;
            nodes.push(AngularPosition::new(theta, phi).expect("grid angles are in range"));
            weights.push(w * phi_weight);
        }
    }
    Ok(SphereGrid {
        nodes,
        weights,
        n_theta,
        n_phi,
    })
}

impl SphereGrid {
    pub fn nodes(&self) -> &[AngularPosition] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes paired with their solid-angle weights, in summation order.
    pub fn iter(&self) -> impl Iterator<Item = (AngularPosition, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// ∫ f dΩ approximated by the grid, summed in fixed node order.
    pub fn integrate(&self, mut f: impl FnMut(AngularPosition) -> Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (pos, w) in self.iter() {
            acc += w * f(pos);
        }
        acc
    }
}
