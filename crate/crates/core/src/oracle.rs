//! Brute-force verification through discrete measures.
//!
//! A function in the class is built from two probability measures on the
//! circle: `μ` for the tilted Carathéodory factor and `ν` for the starlike
//! factor. With finitely many atoms the double integral is a finite weighted
//! sum of extremal kernels, so the coefficients are exact up to rounding.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernels::{coeffs_from_derivative, extremal_kernel_coeffs, ExtremalKernelParams};
use crate::sharp::sharp_bound;
use crate::{Beta, Error, Result, TruncatedSeries, UnitPoint};

/// Allowed deviation of the total weight from `1`.
pub const WEIGHT_TOL: f64 = 1e-12;

/// A probability measure with finitely many atoms on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    atoms: Vec<(UnitPoint, f64)>,
}

impl DiscreteMeasure {
    /// Checks that there is at least one atom, weights are finite and
    /// nonnegative, and they sum to `1` within [`WEIGHT_TOL`].
    pub fn new(atoms: Vec<(UnitPoint, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("no atoms"));
        }
        if atoms.iter().any(|&(_, w)| !w.is_finite() || w < 0.0) {
            return Err(Error::InvalidMeasure("negative or non-finite weight"));
        }
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > WEIGHT_TOL {
            return Err(Error::InvalidMeasure("weights do not sum to 1"));
        }
        Ok(DiscreteMeasure { atoms })
    }

    /// The Dirac mass at `p`.
    pub fn point_mass(p: UnitPoint) -> Self {
        DiscreteMeasure {
            atoms: alloc::vec![(p, 1.0)],
        }
    }

    /// `(point, weight)` pairs.
    pub fn atoms(&self) -> &[(UnitPoint, f64)] {
        &self.atoms
    }

    /// `λ·self + (1 − λ)·other`.
    pub fn mix(&self, other: &DiscreteMeasure, lambda: f64) -> Result<Self> {
        let atoms = self
            .atoms
            .iter()
            .map(|&(p, w)| (p, lambda * w))
            .chain(other.atoms.iter().map(|&(p, w)| (p, (1.0 - lambda) * w)))
            .collect();
        Self::new(atoms)
    }
}

/// A function of the class built from a pair of discrete measures.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    /// Measure of the Carathéodory factor.
    pub mu: DiscreteMeasure,
    /// Measure of the starlike factor.
    pub nu: DiscreteMeasure,
    /// Tilt angle.
    pub beta: Beta,
    /// Maclaurin coefficients of `f`, with `a₀ = 0` and `a₁ = 1`.
    pub coeffs: TruncatedSeries,
}

impl SampledFunction {
    /// `|aₙ|`.
    pub fn coeff_abs(&self, n: usize) -> f64 {
        self.coeffs.coeff(n).norm()
    }
}

/// `f′` as the weighted double sum of extremal kernels over atom pairs,
/// truncated at `order`, then integrated (so `f` has order `order + 1`).
pub fn build_sampled_function(
    mu: &DiscreteMeasure,
    nu: &DiscreteMeasure,
    beta: Beta,
    order: usize,
) -> Result<SampledFunction> {
    let mut derivative = TruncatedSeries::zero(order);
    for &(x, wx) in mu.atoms() {
        for &(y, wy) in nu.atoms() {
            let kernel = extremal_kernel_coeffs(ExtremalKernelParams { x, y, beta }, order);
            derivative.add_scaled(wx * wy, &kernel)?;
        }
    }
    Ok(SampledFunction {
        mu: mu.clone(),
        nu: nu.clone(),
        beta,
        coeffs: coeffs_from_derivative(&derivative)?,
    })
}

/// `k` atoms at uniform angles with normalized uniform weights.
pub fn random_measure_with<R: Rng>(rng: &mut R, k_atoms: usize) -> DiscreteMeasure {
    assert!(k_atoms >= 1, "a measure needs at least one atom");
    let mut atoms: Vec<(UnitPoint, f64)> = (0..k_atoms)
        .map(|_| {
            let theta = rng.random_range(-PI..PI);
            // avoid an all-zero draw
            let w = rng.random::<f64>() + f64::EPSILON;
            (UnitPoint::from_angle(theta), w)
        })
        .collect();
    normalize(&mut atoms);
    DiscreteMeasure { atoms }
}

/// `k` atoms within `spread` radians of `centre`, normalized uniform weights.
pub fn clustered_measure_with<R: Rng>(
    rng: &mut R,
    k_atoms: usize,
    centre: f64,
    spread: f64,
) -> DiscreteMeasure {
    assert!(k_atoms >= 1, "a measure needs at least one atom");
    let mut atoms: Vec<(UnitPoint, f64)> = (0..k_atoms)
        .map(|_| {
            let theta = centre + spread * rng.random_range(-1.0..1.0);
            (UnitPoint::from_angle(theta), rng.random::<f64>() + f64::EPSILON)
        })
        .collect();
    normalize(&mut atoms);
    DiscreteMeasure { atoms }
}

fn normalize(atoms: &mut [(UnitPoint, f64)]) {
    let total: f64 = atoms.iter().map(|a| a.1).sum();
    for a in atoms.iter_mut() {
        a.1 /= total;
    }
}

/// [`random_measure_with`] on a ChaCha8 stream seeded by `rng_seed`.
///
/// # Panics
///
/// If `k_atoms == 0`.
pub fn random_measure(k_atoms: usize, rng_seed: u64) -> DiscreteMeasure {
    random_measure_with(&mut ChaCha8Rng::seed_from_u64(rng_seed), k_atoms)
}

/// Outcome of a randomized check of the sharp bound.
#[derive(Debug, Clone, PartialEq)]
pub struct StressReport {
    /// Largest `|aₙ|` over all sampled functions.
    pub max_observed: f64,
    /// The sharp bound being checked.
    pub bound: f64,
    /// `bound − max_observed`.
    pub margin: f64,
    /// Measures `(μ, ν)` of the sample that reached `max_observed`.
    pub worst: (DiscreteMeasure, DiscreteMeasure),
}

/// Samples `trials` random measure pairs with `k_atoms` atoms each and
/// compares the largest `|aₙ|` with the sharp bound.
pub fn stress_bound(
    n: usize,
    beta: Beta,
    trials: usize,
    k_atoms: usize,
    seed: u64,
) -> Result<StressReport> {
    let bound = sharp_bound(n, beta)?.bound_t1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    stress_with(n, beta, bound, trials, || {
        (
            random_measure_with(&mut rng, k_atoms),
            random_measure_with(&mut rng, k_atoms),
        )
    })
}

/// Like [`stress_bound`] but with caller-supplied measure pairs.
pub fn stress_with<F>(
    n: usize,
    beta: Beta,
    bound: f64,
    trials: usize,
    mut sample: F,
) -> Result<StressReport>
where
    F: FnMut() -> (DiscreteMeasure, DiscreteMeasure),
{
    let mut best: Option<(f64, DiscreteMeasure, DiscreteMeasure)> = None;
    for _ in 0..trials.max(1) {
        let (mu, nu) = sample();
        let f = build_sampled_function(&mu, &nu, beta, n - 1)?;
        let a = f.coeff_abs(n);
        if best.as_ref().is_none_or(|b| a > b.0) {
            best = Some((a, mu, nu));
        }
    }
    let (max_observed, mu, nu) = best.expect("at least one trial");
    Ok(StressReport {
        max_observed,
        bound,
        margin: bound - max_observed,
        worst: (mu, nu),
    })
}
