//! Tolerance tiers shared by the checks.
//!
//! Closed-form algebra, truncated-series identities and Monte-Carlo
//! estimates carry errors of very different sizes, so each has its own tier.

/// Closed-form octonion algebra.
pub const ALG_TOL: f64 = 1e-12;

/// Identities between truncated series or rational functions.
pub const SERIES_TOL: f64 = 1e-8;

/// Sampled maxima such as diameters.
pub const SAMPLE_TOL: f64 = 1e-2;

/// Threshold below which an octonion is treated as a zero divisor.
pub const ZERO_DIVISOR: f64 = 1e-300;

/// Threshold on `|Im w|` below which a point is treated as real.
pub const REAL_POINT: f64 = 1e-12;

/// Threshold on `|den(w)|` below which an evaluation is a pole.
pub const POLE: f64 = 1e-12;

/// Contact-point certification tolerance on `|f(xi)| = 1`.
pub const CONTACT: f64 = 1e-8;

/// Tolerances as a runtime value, for configurable runs.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    pub alg: f64,
    pub series: f64,
    pub sample: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            alg: ALG_TOL,
            series: SERIES_TOL,
            sample: SAMPLE_TOL,
        }
    }
}
