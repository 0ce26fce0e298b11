//! Truncated complex power series `c₀ + c₁z + … + c_N z^N`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_complex::Complex64;

use crate::{Error, Result, UnitPoint};

/// Coefficients `c₀..c_N` of a Maclaurin expansion truncated at order `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Wraps `c₀..c_N`; at least one coefficient is required.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Real coefficients, mostly for tests and examples.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Complex64::new(0.0, 0.0); order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// Truncation order `N`.
    #[inline]
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^k`; zero past the truncation order.
    #[inline]
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// All coefficients.
    #[inline]
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Cauchy product truncated at the common order.
    pub fn multiply(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        series_multiply(self, other)
    }

    /// `self += weight · other`, for accumulating mixtures.
    pub fn add_scaled(&mut self, weight: f64, other: &TruncatedSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * weight;
        }
        Ok(())
    }

    /// Horner evaluation of the truncated polynomial at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Largest componentwise distance to `other` (orders must agree).
    pub fn max_abs_diff(&self, other: &TruncatedSeries) -> Result<f64> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Cauchy product `c_k = Σ_{j≤k} a_j b_{k−j}`, truncated at the common order.
pub fn series_multiply(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let n = a.order();
    let coeffs = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|j| a.coeffs[j] * b.coeffs[k - j])
                .fold(Complex64::new(0.0, 0.0), Add::add)
        })
        .collect();
    Ok(TruncatedSeries { coeffs })
}

impl Mul for &TruncatedSeries {
    type Output = Result<TruncatedSeries>;

    fn mul(self, rhs: &TruncatedSeries) -> Self::Output {
        series_multiply(self, rhs)
    }
}

/// Exponent of the pole in `1/(1 − yz)^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolePower {
    /// `1/(1 − yz)`, coefficients `y^k`.
    Simple,
    /// `1/(1 − yz)²`, coefficients `(k + 1) y^k`.
    Double,
}

/// Coefficients of `1/(1 − yz)` or `1/(1 − yz)²` up to `z^order`.
pub fn geometric_kernel_series(y: UnitPoint, power: PolePower, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| {
            let yk = y.pow(k as i64).to_complex();
            match power {
                PolePower::Simple => yk,
                PolePower::Double => yk * (k as f64 + 1.0),
            }
        })
        .collect();
    TruncatedSeries { coeffs }
}
