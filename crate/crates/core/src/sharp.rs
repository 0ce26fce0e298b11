//! Sharp bound on `|aₙ|` for every `n ≥ 2`.
//!
//! With `u = x/y`, the n-th coefficient of the extremal kernel has modulus
//! `(2 cos β / n) · φₙ(u)` where
//!
//! ```text
//! φₙ(u) = | n/(1 + e^{−2iβ}) + Σ_{k=1}^{n−1} k u^{n−k} |,
//! ```
//!
//! so the sharp bound is `(2 cos β / n) · max_{|u|=1} φₙ(u)`. The maximum is
//! found by a dense grid followed by golden-section refinement of every grid
//! local maximum.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::kernels::{coeffs_from_derivative, extremal_kernel_coeffs, ExtremalKernelParams};
use crate::search::golden_section_max;
use crate::{third, Beta, Error, Result, UnitPoint};

/// Minimum number of grid angles.
pub const MIN_GRID: usize = 4096;
/// Grid angles per unit of `n`.
pub const GRID_PER_INDEX: usize = 1024;
/// Bracket width at which golden-section refinement stops, in radians.
pub const REFINE_TOL: f64 = 1e-13;
/// Relative slack within which two maxima count as tied.
pub const TIE_TOL: f64 = 1e-12;

/// Everything known about the bound on `|aₙ|` for one `(β, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    /// Tilt angle.
    pub beta: Beta,
    /// Coefficient index.
    pub n: usize,
    /// The sharp bound `(2 cos β / n) · phi_max`.
    pub bound_t1: f64,
    /// Goodman–Saff bound `1 + (n − 1) cos β`.
    pub gs_bound: f64,
    /// Point where the circle objective attains its maximum.
    pub u_n: UnitPoint,
    /// Maximum of the circle objective.
    pub phi_max: f64,
    /// Explicit bound from the cubic root, only for `n = 3`.
    pub bound_t2: Option<f64>,
    /// Root of the stationarity cubic in `[0, 1)`, only for `n = 3`.
    pub t0: Option<f64>,
}

/// `e^{iβ} n/(2 cos β) = n/(1 + e^{−2iβ})`.
fn constant_term(n: usize, beta: Beta) -> Complex64 {
    Complex64::from_polar(n as f64 / (2.0 * beta.cos()), beta.value())
}

fn check_index(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::IndexTooSmall(n))
    } else {
        Ok(())
    }
}

/// The circle objective `φₙ(u)`.
///
/// # Panics
///
/// If `n < 2`.
pub fn phi(n: usize, beta: Beta, u: UnitPoint) -> f64 {
    assert!(n >= 2, "phi needs n >= 2, got {n}");
    let sum = (1..n)
        .map(|k| u.pow((n - k) as i64).to_complex() * k as f64)
        .fold(constant_term(n, beta), |acc, t| acc + t);
    sum.norm()
}

/// `φₙ(e^{iθ})²` with the powers built by complex multiplication; used on the
/// grid and in refinement where it is evaluated many times.
fn phi_sq_at(n: usize, constant: Complex64, theta: f64) -> f64 {
    // Horner in u: Σ_{k=1}^{n−1} k u^{n−k} = u(1·u^{n−2} + 2u^{n−3} + … + (n−1)).
    let u = Complex64::from_polar(1.0, theta);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..n {
        acc = acc * u + k as f64;
    }
    (acc * u + constant).norm_sqr()
}

/// Global maximum of `φₙ` over the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleMax {
    /// The maximum value.
    pub phi_max: f64,
    /// Attaining point; the one with the smallest `|angle|` among ties.
    pub u_n: UnitPoint,
}

/// Maximizes `φₙ` over `|u| = 1`.
///
/// Evaluates `φₙ²` on `max(4096, 1024 n)` uniform angles, refines every grid
/// local maximum by golden section down to a `1e−13` bracket, and keeps the
/// best. Ties within a relative `1e−12` go to the smallest `|angle|`.
///
/// # Panics
///
/// If `n < 2`.
pub fn maximize_phi(n: usize, beta: Beta) -> CircleMax {
    assert!(n >= 2, "maximize_phi needs n >= 2, got {n}");
    let constant = constant_term(n, beta);
    let m = MIN_GRID.max(GRID_PER_INDEX * n);
    let step = TAU / m as f64;
    let angle = |j: usize| -PI + step * (j + 1) as f64;
    let grid: Vec<f64> = (0..m).map(|j| phi_sq_at(n, constant, angle(j))).collect();

    let mut candidates: Vec<(f64, f64)> = Vec::new();
    for j in 0..m {
        let prev = grid[(j + m - 1) % m];
        let next = grid[(j + 1) % m];
        if grid[j] >= prev && grid[j] >= next {
            let centre = angle(j);
            let (theta, value) = golden_section_max(
                |t| phi_sq_at(n, constant, t),
                centre - step,
                centre + step,
                REFINE_TOL,
            );
            let value = value.max(grid[j]);
            let theta = if value == grid[j] { centre } else { theta };
            candidates.push((UnitPoint::from_angle(theta).angle(), value));
        }
    }

    let best = candidates.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let slack = TIE_TOL * best.max(1.0);
    let (theta, _) = candidates
        .iter()
        .filter(|c| c.1 >= best - slack)
        .min_by(|a, b| a.0.abs().total_cmp(&b.0.abs()))
        .copied()
        .expect("grid has at least one local maximum");
    let u_n = UnitPoint::from_angle(theta);
    CircleMax { phi_max: phi(n, beta, u_n), u_n }
}

/// Goodman–Saff bound `1 + (n − 1) cos β`.
pub fn goodman_saff_bound(n: usize, beta: Beta) -> f64 {
    1.0 + (n as f64 - 1.0) * beta.cos()
}

/// The sharp bound on `|aₙ|` with its maximizer and the Goodman–Saff comparison.
pub fn sharp_bound(n: usize, beta: Beta) -> Result<BoundReport> {
    check_index(n)?;
    let CircleMax { phi_max, u_n } = maximize_phi(n, beta);
    Ok(BoundReport {
        beta,
        n,
        bound_t1: 2.0 * beta.cos() / n as f64 * phi_max,
        gs_bound: goodman_saff_bound(n, beta),
        u_n,
        phi_max,
        bound_t2: None,
        t0: None,
    })
}

/// [`sharp_bound`], plus the explicit cubic-root bound when `n = 3`.
pub fn full_report(n: usize, beta: Beta) -> Result<BoundReport> {
    let mut report = sharp_bound(n, beta)?;
    if n == 3 {
        let explicit = third::third_coefficient_bound(beta)?;
        report.bound_t2 = Some(explicit.bound);
        report.t0 = Some(explicit.t0);
    }
    Ok(report)
}

/// Parameters of the extremal kernel for `n` with `y = 1`, `x = uₙ`.
pub fn extremal_params(n: usize, beta: Beta) -> Result<ExtremalKernelParams> {
    check_index(n)?;
    Ok(ExtremalKernelParams {
        x: maximize_phi(n, beta).u_n,
        y: UnitPoint::ONE,
        beta,
    })
}

/// `|aₙ|` of the extremal function `f′ = 1/(1 − z)² · (1 + e^{−2iβ}uₙz)/(1 − uₙz)`,
/// built through the kernel series and integrated. Equals the sharp bound.
pub fn extremal_attainment(n: usize, beta: Beta) -> Result<f64> {
    let params = extremal_params(n, beta)?;
    let derivative = extremal_kernel_coeffs(params, n - 1);
    let f = coeffs_from_derivative(&derivative)?;
    Ok(f.coeff(n).norm())
}
