//! Sharp coefficient bounds for close-to-convex functions with argument β.
//!
//! A normalized analytic function `f(z) = z + a₂z² + …` on the unit disc is
//! close-to-convex with argument β when `z f′/g` has positive real part after
//! rotation by `e^{iβ}`, for some starlike `g`. Every such `f′` is an average
//! of the kernel
//!
//! ```text
//! 1/(1 − yz)² · (1 + e^{−2iβ} x z)/(1 − x z),   |x| = |y| = 1,
//! ```
//!
//! so the coefficient problem reduces to maximizing a trigonometric
//! polynomial over the unit circle. This crate provides:
//!
//! - [`series`]: truncated complex power series and the geometric kernels,
//! - [`kernels`]: closed-form coefficients of the Carathéodory and extremal
//!   kernels, plus a sampled membership check,
//! - [`sharp`]: the general sharp bound on `|aₙ|` via global maximization on
//!   the circle, compared against `1 + (n − 1) cos β`,
//! - [`third`]: the explicit bound on `|a₃|` through the root of a cubic,
//! - [`oracle`]: a brute-force layer that builds functions from discrete
//!   measures and checks the bounds against them.
//!
//! The crate is `no_std` (it needs `alloc`); transcendental functions come
//! from `libm` unless the `std` feature is enabled.
//!
//! ```
//! use clbeta_core::{sharp, third, Beta};
//!
//! let beta = Beta::new(core::f64::consts::FRAC_PI_4).unwrap();
//! let general = sharp::sharp_bound(3, beta).unwrap();
//! let explicit = third::third_coefficient_bound(beta).unwrap();
//! assert!((general.bound_t1 - explicit.bound).abs() < 1e-8);
//! assert!(general.bound_t1 < general.gs_bound);
//! ```

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

mod angle;
mod error;
pub mod kernels;
pub mod oracle;
pub(crate) mod search;
pub mod series;
pub mod sharp;
pub mod third;

pub use angle::{Beta, UnitPoint, BETA_GUARD};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use series::TruncatedSeries;
