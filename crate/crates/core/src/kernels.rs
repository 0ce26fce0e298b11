//! Coefficient formulas for the three kernels behind the representation
//! `f′(z) = ∫∫ 1/(1 − yz)² · (1 + e^{−2iβ}xz)/(1 − xz) dμ(x) dν(y)`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Beta, Error, Result, TruncatedSeries, UnitPoint};

/// Tolerance on `f′(0) = 1` accepted by [`coeffs_from_derivative`].
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Radius of the default membership sampling circle.
pub const MEMBERSHIP_RADIUS: f64 = 0.999;

/// Number of angular samples in the default membership check.
pub const MEMBERSHIP_POINTS: usize = 4096;

/// Coefficients of the tilted Carathéodory kernel `(1 + e^{−2iβ}xz)/(1 − xz)`:
/// `c₀ = 1`, `c_k = (1 + e^{−2iβ}) x^k`.
pub fn caratheodory_kernel_coeffs(x: UnitPoint, beta: Beta, order: usize) -> TruncatedSeries {
    let scale = beta.one_plus_tilt();
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                scale * x.pow(k as i64).to_complex()
            }
        })
        .collect();
    TruncatedSeries::new(coeffs).expect("order + 1 >= 1 coefficients")
}

/// Parameters of the extremal derivative kernel
/// `1/(1 − yz)² · (1 + e^{−2iβ}xz)/(1 − xz)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalKernelParams {
    /// Pole of the Carathéodory factor.
    pub x: UnitPoint,
    /// Pole of the starlike factor.
    pub y: UnitPoint,
    /// Tilt angle.
    pub beta: Beta,
}

/// Derivative-series coefficients of the extremal kernel:
///
/// ```text
/// c_n = (n + 1) yⁿ + (1 + e^{−2iβ}) Σ_{k=0}^{n−1} (k + 1) y^k x^{n−k}.
/// ```
///
/// These are coefficients of `f′`; the function itself has `a_{n+1} = c_n/(n + 1)`.
pub fn extremal_kernel_coeffs(p: ExtremalKernelParams, order: usize) -> TruncatedSeries {
    let scale = p.beta.one_plus_tilt();
    let coeffs = (0..=order)
        .map(|n| {
            let lead = p.y.pow(n as i64).to_complex() * (n as f64 + 1.0);
            let mixed = (0..n)
                .map(|k| {
                    (p.y.pow(k as i64) * p.x.pow((n - k) as i64)).to_complex()
                        * (k as f64 + 1.0)
                })
                .fold(Complex64::new(0.0, 0.0), |acc, t| acc + t);
            lead + scale * mixed
        })
        .collect();
    TruncatedSeries::new(coeffs).expect("order + 1 >= 1 coefficients")
}

/// Integrates a derivative series with `f(0) = 0`: `a₀ = 0`, `a_k = c_{k−1}/k`.
///
/// The result has order `N + 1`. The input must satisfy `c₀ = 1` within
/// [`NORMALIZATION_TOL`], which is the `f′(0) = 1` normalization.
pub fn coeffs_from_derivative(cderiv: &TruncatedSeries) -> Result<TruncatedSeries> {
    let c0 = cderiv.coeff(0);
    if (c0 - Complex64::new(1.0, 0.0)).norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization { re: c0.re, im: c0.im });
    }
    let mut coeffs = Vec::with_capacity(cderiv.order() + 2);
    coeffs.push(Complex64::new(0.0, 0.0));
    coeffs.extend(
        cderiv
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, &c)| c / (j as f64 + 1.0)),
    );
    TruncatedSeries::new(coeffs)
}

/// Necessary condition for `p ∈ P_β`: `Re(e^{iβ} p(z_j)) > 0` at every sample.
///
/// Sampling cannot prove membership; it can only refute it.
pub fn check_tilted_caratheodory(values: &[Complex64], beta: Beta) -> bool {
    let rot = Complex64::from_polar(1.0, beta.value());
    values.iter().all(|&p| (rot * p).re > 0.0)
}

/// Evaluates `f` at `points` equally spaced points on `|z| = radius`.
pub fn sample_on_circle<F>(radius: f64, points: usize, f: F) -> Vec<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    (0..points)
        .map(|j| {
            let theta = core::f64::consts::TAU * j as f64 / points as f64;
            f(Complex64::from_polar(radius, theta))
        })
        .collect()
}

/// `(1 + e^{−2iβ}xz)/(1 − xz)` in closed form.
pub fn caratheodory_kernel_value(x: UnitPoint, beta: Beta, z: Complex64) -> Complex64 {
    let xz = x.to_complex() * z;
    (Complex64::new(1.0, 0.0) + beta.tilt() * xz) / (Complex64::new(1.0, 0.0) - xz)
}

/// Sampled membership check of the Carathéodory factor `(1 + e^{−2iβ}xz)/(1 − xz)`
/// on the default grid.
pub fn caratheodory_factor_passes(x: UnitPoint, beta: Beta) -> bool {
    let values = sample_on_circle(MEMBERSHIP_RADIUS, MEMBERSHIP_POINTS, |z| {
        caratheodory_kernel_value(x, beta, z)
    });
    check_tilted_caratheodory(&values, beta)
}
