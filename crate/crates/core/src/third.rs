//! Explicit bound on `|a₃|`.
//!
//! For `n = 3` the circle objective becomes, with `u = e^{−iα}`,
//!
//! ```text
//! h(α) = |1 + 2e^{iα} + 3e^{2iα}/(1 + e^{−2iβ})|²
//!      = 5 + 9/(4cos²β) + 10cos α + 3cos 2α − 3 tan β (sin 2α + 2 sin α).
//! ```
//!
//! Its maximizing angle `α₀` satisfies `t₀ = 4 sin²(α₀/2)`, where `t₀` is the
//! unique root in `[0, 1)` of the increasing cubic
//!
//! ```text
//! v(t) = t³ − (4/3 cos²β + 6) t² + (40/9 cos²β + 9) t + 4cos²β − 4.
//! ```
//!
//! Substituting the stationarity condition back into `h` gives
//! `h(α₀) = 5 + 9/(4cos²β) + (1 − t₀) + 12/(1 − t₀)`, hence
//! `|a₃| ≤ (2 cos β / 3) √h(α₀)`.

use core::f64::consts::FRAC_PI_3;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Beta, Error, Result, UnitPoint};

/// Below this `|β|` the root is taken to be exactly `0`.
pub const ZERO_BETA_TOL: f64 = 1e-12;
/// Bisection stops once the bracket is narrower than this.
pub const ROOT_TOL: f64 = 1e-14;
/// Largest accepted `|h′(α₀)|` in [`third_coefficient_bound`].
pub const STATIONARITY_TOL: f64 = 1e-6;
/// Largest accepted `h″(α₀)` in [`third_coefficient_bound`].
pub const CONCAVITY_TOL: f64 = 1e-9;

/// `h(α)` for the tilt `β`, in expanded trigonometric form.
pub fn h(alpha: f64, beta: Beta) -> f64 {
    let c2 = beta.cos().powi(2);
    5.0 + 9.0 / (4.0 * c2) + 10.0 * alpha.cos() + 3.0 * (2.0 * alpha).cos()
        - 3.0 * beta.tan() * ((2.0 * alpha).sin() + 2.0 * alpha.sin())
}

/// `h′(α) = −(10 sin α + 6 sin 2α) − 6 tan β (cos 2α + cos α)`.
pub fn h_prime(alpha: f64, beta: Beta) -> f64 {
    -(10.0 * alpha.sin() + 6.0 * (2.0 * alpha).sin())
        - 6.0 * beta.tan() * ((2.0 * alpha).cos() + alpha.cos())
}

/// `h″(α) = −(10 cos α + 12 cos 2α) + 6 tan β (2 sin 2α + sin α)`.
pub fn h_second(alpha: f64, beta: Beta) -> f64 {
    -(10.0 * alpha.cos() + 12.0 * (2.0 * alpha).cos())
        + 6.0 * beta.tan() * (2.0 * (2.0 * alpha).sin() + alpha.sin())
}

/// `h″` at a stationary point, with `tan β` eliminated:
/// `−2(11 + 11 cos α + 4 sin²α cos α)/(cos α + cos 2α)`.
pub fn h_second_at_stationary(alpha: f64) -> f64 {
    let c = alpha.cos();
    let s = alpha.sin();
    -2.0 * (11.0 + 11.0 * c + 4.0 * s * s * c) / (c + (2.0 * alpha).cos())
}

/// Half-angle form of `h′`:
/// `cos(α/2) (2 sin(α/2) + 3 sin((3α + 2β)/2)/cos β)`, which is `−h′(α)/4`.
pub fn half_angle_factorization(alpha: f64, beta: Beta) -> f64 {
    (alpha / 2.0).cos()
        * (2.0 * (alpha / 2.0).sin()
            + 3.0 * ((3.0 * alpha + 2.0 * beta.value()) / 2.0).sin() / beta.cos())
}

/// Coefficients of the stationarity cubic `v(t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoeffs {
    /// Leading coefficient, always `1`.
    pub c3: f64,
    /// `−(4/3 cos²β + 6)`.
    pub c2: f64,
    /// `40/9 cos²β + 9`.
    pub c1: f64,
    /// `4cos²β − 4`, evaluated as `−4 sin²β` to avoid cancellation near `β = 0`.
    pub c0: f64,
}

impl CubicCoeffs {
    /// Coefficients for the tilt `β`.
    pub fn new(beta: Beta) -> Self {
        let c2 = beta.cos().powi(2);
        CubicCoeffs {
            c3: 1.0,
            c2: -(4.0 / 3.0 * c2 + 6.0),
            c1: 40.0 / 9.0 * c2 + 9.0,
            c0: -4.0 * beta.sin().powi(2),
        }
    }

    /// `v(t)`.
    pub fn eval(&self, t: f64) -> f64 {
        ((self.c3 * t + self.c2) * t + self.c1) * t + self.c0
    }

    /// `v′(t)`.
    pub fn derivative(&self, t: f64) -> f64 {
        (3.0 * self.c3 * t + 2.0 * self.c2) * t + self.c1
    }
}

/// `v(t)` for the tilt `β`.
pub fn cubic_v(t: f64, beta: Beta) -> f64 {
    CubicCoeffs::new(beta).eval(t)
}

/// The unique root of `v` in `[0, 1)`.
///
/// Bisects on `[0, 1]`, where `v(0) ≤ 0 < v(1)` and `v` is increasing, down to
/// a `1e−14` bracket, then takes one Newton step. Returns exactly `0` when
/// `|β| < 1e−12`.
pub fn solve_t0(beta: Beta) -> Result<f64> {
    if beta.value().abs() < ZERO_BETA_TOL {
        return Ok(0.0);
    }
    let v = CubicCoeffs::new(beta);
    let (v0, v1) = (v.eval(0.0), v.eval(1.0));
    if v0 > 0.0 || v1 <= 0.0 {
        return Err(Error::BracketViolation { v0, v1 });
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo >= ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if v.eval(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    let polished = t - v.eval(t) / v.derivative(t);
    // keep the polish only if it stays in the certified bracket
    Ok(if polished >= lo && polished <= hi {
        polished
    } else {
        t
    })
}

/// The explicit bound on `|a₃|` and its extremal data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThirdCoefficientBound {
    /// Root of `v` in `[0, 1)`.
    pub t0: f64,
    /// `(2 cos β / 3) √h(α₀)`.
    pub bound: f64,
    /// `e^{iα₀} = 1 − t₀/2 − i sign(β) √(t₀ − t₀²/4)`.
    pub u3: UnitPoint,
    /// Maximizing angle of `h`, with `t₀ = 4 sin²(α₀/2)`.
    pub alpha0: f64,
}

impl ThirdCoefficientBound {
    /// The maximizer of the circle objective `φ₃`, which is `ū₃`: the extremal
    /// kernel uses `x = y · ū₃`.
    pub fn circle_argmax(&self) -> UnitPoint {
        self.u3.conj()
    }
}

/// `max h = 5 + 9/(4cos²β) + (1 − t₀) + 12/(1 − t₀)`.
pub fn h_max_from_root(t0: f64, beta: Beta) -> f64 {
    let c2 = beta.cos().powi(2);
    5.0 + 9.0 / (4.0 * c2) + (1.0 - t0) + 12.0 / (1.0 - t0)
}

/// The explicit bound on `|a₃|`.
///
/// Recovers `α₀` from `t₀` with the sign opposite to `β` and checks that it is
/// a maximum (`h′ ≈ 0`, `h″ ≤ 0`) before returning.
pub fn third_coefficient_bound(beta: Beta) -> Result<ThirdCoefficientBound> {
    let t0 = solve_t0(beta)?;
    let half = (t0.sqrt() / 2.0).asin();
    let alpha0 = if beta.value() > 0.0 { -2.0 * half } else { 2.0 * half };
    let u3 = if t0 == 0.0 {
        UnitPoint::ONE
    } else {
        let sign = if beta.value() > 0.0 { 1.0 } else { -1.0 };
        let z = Complex64::new(1.0 - t0 / 2.0, -sign * (t0 - t0 * t0 / 4.0).sqrt());
        UnitPoint::from_angle(z.arg())
    };

    let d1 = h_prime(alpha0, beta);
    let d2 = h_second(alpha0, beta);
    if d1.abs() > STATIONARITY_TOL || d2 > CONCAVITY_TOL {
        return Err(Error::NotStationary { alpha: alpha0, d1, d2 });
    }

    let bound = 2.0 * beta.cos() / 3.0 * h_max_from_root(t0, beta).sqrt();
    Ok(ThirdCoefficientBound { t0, bound, u3, alpha0 })
}

/// `v((9 − 9cos β)/(9 + 4cos β))`: the root the explicit bound would need to
/// coincide with `1 + 2cos β`. Zero only at `β = 0`.
pub fn remark_crossover(beta: Beta) -> f64 {
    let c = beta.cos();
    cubic_v((9.0 - 9.0 * c) / (9.0 + 4.0 * c), beta)
}

/// `tan β` as a function of the maximizing angle, from `h′(α₀) = 0`:
/// `−(5 sin α₀ + 3 sin 2α₀)/(3(cos α₀ + cos 2α₀))`, for `|α₀| < π/3`.
pub fn tan_beta_from_alpha(alpha0: f64) -> Result<f64> {
    if alpha0.is_nan() || alpha0.abs() >= FRAC_PI_3 {
        return Err(Error::AngleOutOfDomain(alpha0));
    }
    Ok(-(5.0 * alpha0.sin() + 3.0 * (2.0 * alpha0).sin())
        / (3.0 * (alpha0.cos() + (2.0 * alpha0).cos())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sharp::{phi, sharp_bound};
    use core::f64::consts::{FRAC_PI_4, FRAC_PI_6, PI};

    fn b(v: f64) -> Beta {
        Beta::new(v).unwrap()
    }

    fn h_modulus(alpha: f64, beta: Beta) -> f64 {
        let e = Complex64::from_polar(1.0, alpha);
        let one_plus = Complex64::new(1.0, 0.0) + beta.tilt();
        (Complex64::new(1.0, 0.0) + e * 2.0 + e * e * 3.0 / one_plus).norm_sqr()
    }

    #[test]
    fn h_examples() {
        assert!((h(PI, Beta::ZERO) - 0.25).abs() < 1e-13);
        assert!((h(0.0, Beta::ZERO) - 20.25).abs() < 1e-13);
        assert!((h(PI, b(FRAC_PI_4)) - 2.5).abs() < 1e-13);
        for &v in &[-1.2, 0.0, 0.3, 1.4] {
            let beta = b(v);
            let c2 = beta.cos().powi(2);
            assert!((h(PI, beta) - (9.0 - 8.0 * c2) / (4.0 * c2)).abs() < 1e-10);
        }
    }

    #[test]
    fn h_matches_modulus_form() {
        for i in 0..40 {
            let alpha = -PI + 0.157 * i as f64;
            for &v in &[-1.3, -0.4, 0.0, 0.7, 1.2] {
                let beta = b(v);
                let scale = h(alpha, beta).abs().max(1.0);
                assert!((h(alpha, beta) - h_modulus(alpha, beta)).abs() < 1e-12 * scale);
                // φ₃ with descending powers is the conjugate parametrization
                let via_phi = phi(3, beta, UnitPoint::from_angle(-alpha)).powi(2);
                assert!((h(alpha, beta) - via_phi).abs() < 1e-10 * scale);
            }
        }
    }

    #[test]
    fn derivative_examples() {
        for &v in &[-1.0, 0.0, 0.5] {
            assert!(h_prime(PI, b(v)).abs() < 1e-12);
        }
        assert!((h_second(PI, Beta::ZERO) + 2.0).abs() < 1e-12);
        assert_eq!(h_prime(0.0, Beta::ZERO), 0.0);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let step = 1e-5;
        for i in 0..60 {
            let alpha = -3.0 + 0.1 * i as f64;
            for &v in &[-1.1, -0.2, 0.0, 0.6, 1.3] {
                let beta = b(v);
                let fd1 = (h(alpha + step, beta) - h(alpha - step, beta)) / (2.0 * step);
                let fd2 = (h_prime(alpha + step, beta) - h_prime(alpha - step, beta)) / (2.0 * step);
                assert!((fd1 - h_prime(alpha, beta)).abs() < 1e-6);
                assert!((fd2 - h_second(alpha, beta)).abs() < 1e-6);
                assert!((half_angle_factorization(alpha, beta) + h_prime(alpha, beta) / 4.0).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(cubic_v(0.0, Beta::ZERO), 0.0);
        // v(t) = t (t − 11/3)² at β = 0
        for &t in &[0.1, 0.5, 0.9, 2.0] {
            let f = t * (t - 11.0 / 3.0) * (t - 11.0 / 3.0);
            assert!((cubic_v(t, Beta::ZERO) - f).abs() < 1e-13);
        }
        let v1 = cubic_v(1.0, b(FRAC_PI_4));
        assert!((v1 - (1.0 - 20.0 / 3.0 + 101.0 / 9.0 - 2.0)).abs() < 1e-13);
        assert!((v1 - 32.0 / 9.0).abs() < 1e-13);
        assert!(cubic_v(0.2016, b(FRAC_PI_4)).abs() < 1e-3);
    }

    #[test]
    fn cubic_coefficients_sign() {
        for i in 0..=100 {
            let beta = b(-1.5 + 0.03 * i as f64);
            let c = CubicCoeffs::new(beta);
            assert!(c.c0 <= 0.0);
            let direct = 4.0 * beta.cos().powi(2) - 4.0;
            assert!((c.c0 - direct).abs() < 1e-15);
        }
        assert_eq!(CubicCoeffs::new(Beta::ZERO).c0, 0.0);
    }

    #[test]
    fn root_examples() {
        assert_eq!(solve_t0(Beta::ZERO).unwrap(), 0.0);
        let t = solve_t0(b(FRAC_PI_4)).unwrap();
        // 40-digit reference: 0.20164122735988710244…
        assert!((t - 0.201_641_227_359_887_1).abs() < 1e-15);
        assert_eq!(solve_t0(b(-FRAC_PI_4)).unwrap(), t);
        assert!(cubic_v(t, b(FRAC_PI_4)).abs() < 1e-14);
    }

    #[test]
    fn tiny_tilt_root_keeps_relative_accuracy() {
        // v ≈ −4β² + (121/9)t near 0, so t₀ ≈ 36β²/121
        let beta = b(1e-6);
        let t = solve_t0(beta).unwrap();
        assert!((t / (36e-12 / 121.0) - 1.0).abs() < 1e-5);
        let r = third_coefficient_bound(beta).unwrap();
        assert!(h_prime(r.alpha0, beta).abs() < 1e-8);
    }

    #[test]
    fn explicit_bound_examples() {
        let r = third_coefficient_bound(Beta::ZERO).unwrap();
        assert_eq!(r.t0, 0.0);
        assert_eq!(r.u3, UnitPoint::ONE);
        assert!((r.bound - 3.0).abs() < 1e-14);

        let r = third_coefficient_bound(b(FRAC_PI_4)).unwrap();
        assert!((r.bound - 2.372_490_255_093_443).abs() < 1e-12);
        assert!((r.u3.to_complex().norm() - 1.0).abs() < 1e-12);
        assert!(r.u3.angle() < 0.0);
        let expected = Complex64::new(1.0 - r.t0 / 2.0, -(r.t0 - r.t0 * r.t0 / 4.0).sqrt());
        assert!((r.u3.to_complex() - expected).norm() < 1e-14);
        assert!((r.alpha0 - r.u3.angle()).abs() < 1e-14);
    }

    #[test]
    fn result_invariants() {
        for i in 0..=60 {
            let beta = b(-1.5 + 0.05 * i as f64);
            let r = third_coefficient_bound(beta).unwrap();
            assert!(cubic_v(r.t0, beta).abs() < 1e-11);
            assert!((r.t0 - 4.0 * (r.alpha0 / 2.0).sin().powi(2)).abs() < 1e-9);
            let hm = h_max_from_root(r.t0, beta);
            assert!((h(r.alpha0, beta) - hm).abs() < 1e-8 * hm);
            assert!((r.circle_argmax().angle() + r.alpha0).abs() < 1e-14);
        }
    }

    #[test]
    fn agrees_with_circle_maximization() {
        for i in 0..25 {
            let beta = b(-1.45 + 0.12 * i as f64);
            let t1 = sharp_bound(3, beta).unwrap();
            let t2 = third_coefficient_bound(beta).unwrap();
            assert!((t1.bound_t1 - t2.bound).abs() < 1e-8);
            assert!((t1.u_n.angle() - t2.circle_argmax().angle()).abs() < 1e-6);
        }
    }

    #[test]
    fn cubic_increasing_on_unit_interval() {
        for &v in &[0.0, 0.3, -0.8, 1.2, 1.57] {
            let c = CubicCoeffs::new(b(v));
            for j in 0..1000 {
                assert!(c.derivative(j as f64 / 1000.0) > 0.0);
            }
        }
    }

    #[test]
    fn crossover_only_at_zero() {
        assert_eq!(remark_crossover(Beta::ZERO), 0.0);
        for &v in &[FRAC_PI_4, PI / 3.0, -FRAC_PI_6] {
            assert!(remark_crossover(b(v)).abs() > 1e-6);
        }
    }

    #[test]
    fn tan_round_trip() {
        assert_eq!(tan_beta_from_alpha(0.0).unwrap(), 0.0);
        for &v in &[FRAC_PI_4, -0.3, 1.2, -1.45] {
            let r = third_coefficient_bound(b(v)).unwrap();
            assert!((tan_beta_from_alpha(r.alpha0).unwrap() - v.tan()).abs() < 1e-8 * v.tan().abs().max(1.0));
        }
        assert_eq!(tan_beta_from_alpha(1.1), Err(Error::AngleOutOfDomain(1.1)));
        assert!(tan_beta_from_alpha(-FRAC_PI_3).is_err());
        assert!(tan_beta_from_alpha(f64::NAN).is_err());
    }

    #[test]
    fn tan_map_is_decreasing() {
        let mut prev = f64::INFINITY;
        for j in 1..2000 {
            let a = -FRAC_PI_3 + 2.0 * FRAC_PI_3 * j as f64 / 2000.0;
            let g = tan_beta_from_alpha(a).unwrap();
            assert!(g < prev);
            prev = g;
        }
    }

    #[test]
    fn half_sine_equation_holds() {
        // 11x − 12x³ + 3 tan β √(1 − x²)(1 − 4x²) = 0 with x = sin(α₀/2)
        for &v in &[0.2, -0.9, 1.3] {
            let beta = b(v);
            let r = third_coefficient_bound(beta).unwrap();
            let x = (r.alpha0 / 2.0).sin();
            let res = 11.0 * x - 12.0 * x.powi(3) + 3.0 * beta.tan() * (1.0 - x * x).sqrt() * (1.0 - 4.0 * x * x);
            assert!(res.abs() < 1e-9 * beta.tan().abs().max(1.0));
        }
    }

    #[test]
    fn symmetric_in_beta() {
        for &v in &[0.1, 0.7, 1.3] {
            let p = third_coefficient_bound(b(v)).unwrap();
            let m = third_coefficient_bound(b(-v)).unwrap();
            assert!((p.bound - m.bound).abs() < 1e-12);
            assert!((p.u3.to_complex() - m.u3.to_complex().conj()).norm() < 1e-12);
        }
    }
}
