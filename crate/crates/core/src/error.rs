use thiserror::Error;

/// Errors reported by the bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// β is not finite or lies outside `(−π/2 + ε, π/2 − ε)`.
    #[error("beta = {0} is outside the admissible interval |beta| <= pi/2 - 1e-9")]
    BetaOutOfRange(f64),
    /// Two series with different truncation orders were combined.
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch {
        /// Order of the left operand.
        left: usize,
        /// Order of the right operand.
        right: usize,
    },
    /// A derivative series does not start with `f′(0) = 1`.
    #[error("derivative series has c0 = {re} + {im}i, expected 1")]
    Normalization {
        /// Real part of the offending constant term.
        re: f64,
        /// Imaginary part of the offending constant term.
        im: f64,
    },
    /// A series was constructed without coefficients.
    #[error("a truncated series needs at least one coefficient")]
    EmptySeries,
    /// Coefficient index below 2.
    #[error("coefficient index n = {0} must be at least 2")]
    IndexTooSmall(usize),
    /// A discrete measure is not a probability measure.
    #[error("invalid measure: {0}")]
    InvalidMeasure(&'static str),
    /// The root bracket for the stationarity cubic does not change sign.
    #[error("cubic bracket violated: v(0) = {v0}, v(1) = {v1}")]
    BracketViolation {
        /// Value at the left end of `[0, 1]`.
        v0: f64,
        /// Value at the right end of `[0, 1]`.
        v1: f64,
    },
    /// The maximizing angle is outside `(−π/3, π/3)`.
    #[error("angle {0} is outside (-pi/3, pi/3)")]
    AngleOutOfDomain(f64),
    /// The recovered maximizing angle fails the first or second order test.
    #[error("stationarity check failed at alpha = {alpha}: h' = {d1}, h'' = {d2}")]
    NotStationary {
        /// Recovered angle.
        alpha: f64,
        /// First derivative there.
        d1: f64,
        /// Second derivative there.
        d2: f64,
    },
}

/// Result alias used across the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
