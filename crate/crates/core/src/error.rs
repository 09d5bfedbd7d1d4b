use thiserror::Error;

/// Errors raised by the slice-regular calculus.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a zero divisor (|w| = {0:e})")]
    ZeroDivisor(f64),

    #[error("denominator vanishes at the evaluation point (|den(w)| = {0:e})")]
    PoleAtPoint(f64),

    #[error("point is real; the spherical quotient is undefined")]
    RealPoint,

    #[error("constant term vanishes; series reciprocal does not exist")]
    ZeroConstantTerm,

    #[error("frame is not orthonormal: {0}")]
    BadFrame(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("not a contact point: |f(xi)| = {0}")]
    NotContactPoint(f64),

    #[error("function has non-quaternionic coefficients")]
    NonQuaternionic,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("function vanishes at the evaluation point")]
    ZeroAtPoint,

    #[error("symmetrization vanishes at the evaluation point")]
    ZeroOfSymmetrization,

    #[error("function is identically zero")]
    IdenticallyZero,

    #[error("symmetrization vanishes on the contour (min |f^s| = {0:e})")]
    ZeroOnContour(f64),

    #[error("contour integral {raw} is not close to an integer (guard {guard})")]
    NonIntegerCount { raw: f64, guard: f64 },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
