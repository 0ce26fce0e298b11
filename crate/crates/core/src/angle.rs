use core::f64::consts::{FRAC_PI_2, PI, TAU};
use core::ops::{Mul, Neg};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Distance kept from `±π/2`; `1/cos β` stays below about `1e9`.
pub const BETA_GUARD: f64 = 1e-9;

/// The tilt angle β, strictly inside `(−π/2, π/2)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Beta(f64);

impl Beta {
    /// Largest admissible `|β|`.
    pub const MAX: f64 = FRAC_PI_2 - BETA_GUARD;

    /// Zero tilt: the classical close-to-convex case.
    pub const ZERO: Beta = Beta(0.0);

    /// Accepts radians with `|value| ≤ π/2 − 1e−9`.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value.abs() <= Self::MAX {
            Ok(Beta(value))
        } else {
            Err(Error::BetaOutOfRange(value))
        }
    }

    /// Accepts degrees.
    pub fn from_degrees(degrees: f64) -> Result<Self> {
        Self::new(degrees.to_radians())
    }

    /// The angle in radians.
    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `cos β`.
    #[inline]
    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    /// `sin β`.
    #[inline]
    pub fn sin(self) -> f64 {
        self.0.sin()
    }

    /// `tan β`.
    #[inline]
    pub fn tan(self) -> f64 {
        self.0.tan()
    }

    /// `e^{−2iβ}`, the tilt applied to the Carathéodory kernel numerator.
    #[inline]
    pub fn tilt(self) -> Complex64 {
        Complex64::from_polar(1.0, -2.0 * self.0)
    }

    /// `1 + e^{−2iβ} = 2 cos β · e^{−iβ}`.
    #[inline]
    pub fn one_plus_tilt(self) -> Complex64 {
        Complex64::from_polar(2.0 * self.0.cos(), -self.0)
    }

}

impl Neg for Beta {
    type Output = Beta;

    fn neg(self) -> Beta {
        Beta(-self.0)
    }
}

/// A point `e^{iθ}` on the unit circle, stored by its angle in `(−π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitPoint {
    theta: f64,
}

impl UnitPoint {
    /// The point `1`.
    pub const ONE: UnitPoint = UnitPoint { theta: 0.0 };

    /// The point `e^{iθ}`; `θ` is reduced into `(−π, π]`.
    pub fn from_angle(theta: f64) -> Self {
        UnitPoint {
            theta: reduce_angle(theta),
        }
    }

    /// Angle in `(−π, π]`.
    #[inline]
    pub fn angle(self) -> f64 {
        self.theta
    }

    /// `e^{iθ}` as a complex number.
    #[inline]
    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    /// `u^k`, computed by angle multiplication.
    #[inline]
    pub fn pow(self, k: i64) -> UnitPoint {
        let k = k as f64;
        let product = k * self.theta;
        let error = k.mul_add(self.theta, -product);
        UnitPoint {
            theta: reduce_split(product, error),
        }
    }

    /// `ū = 1/u`.
    #[inline]
    pub fn conj(self) -> UnitPoint {
        UnitPoint::from_angle(-self.theta)
    }
}

/// `2π − TAU`, the part of 2π lost to rounding.
const TAU_LO: f64 = 2.449_293_598_294_706_4e-16;

impl Mul for UnitPoint {
    type Output = UnitPoint;

    /// `u · v`, by adding angles.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: UnitPoint) -> UnitPoint {
        UnitPoint::from_angle(self.theta + other.theta)
    }
}

fn reduce_angle(theta: f64) -> f64 {
    if theta > -PI && theta <= PI {
        return theta;
    }
    reduce_split(theta, 0.0)
}

/// Reduces `hi + lo` into `(−π, π]`, where `lo` is a small correction term.
fn reduce_split(hi: f64, lo: f64) -> f64 {
    if !hi.is_finite() {
        return hi;
    }
    let turns = ((hi + PI) / TAU).floor();
    let mut r = (-turns).mul_add(TAU, hi) - turns * TAU_LO + lo;
    if r <= -PI {
        r += TAU;
    }
    if r > PI {
        r -= TAU;
    }
    r
}
