//! Crate-wide error type.

use core::fmt;

use crate::exclusion::AdmissibilityReport;

/// Result alias used by every fallible operation in the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors produced by construction, evaluation and integration.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Raw-mode Hermite evaluation requested beyond the overflow guard.
    OrderTooLarge { n: u32, max: u32 },
    /// Integer argument outside the exact-arithmetic range.
    OutsideExactRange { n: u32, max: u32 },
    /// Scalar argument violates a documented precondition.
    InvalidArgument(&'static str),
    /// Position outside a bounded domain.
    OutsideDomain { x: f64, lo: f64, hi: f64 },
    /// Evaluation at or beyond a singular turning point.
    Singularity { x: f64 },
    /// A root finder failed to converge; `index` is the 1-based zero index.
    SolverFailed { what: &'static str, index: usize },
    /// Adaptive subdivision budget exhausted; carries the best estimate.
    QuadratureBudget { best: f64, error_estimate: f64 },
    /// Integrand returned NaN at the given abscissa.
    NanIntegrand { x: f64 },
    /// Density integrates to (numerically) zero, so no mean exists.
    DegenerateDensity,
    /// A component moment diverges.
    DivergentMoment,
    /// Closed form only exists for a fixed set of exponents.
    UnsupportedExponent { r: u32 },
    /// Malformed integration interval (lower must be strictly below upper).
    BadInterval { lo: f64, hi: f64 },
    /// Candidate density failed one or more admissibility conditions.
    Inadmissible(AdmissibilityReport),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderTooLarge { n, max } => {
                write!(f, "order {n} exceeds the overflow guard ({max})")
            }
            Error::OutsideExactRange { n, max } => {
                write!(f, "argument {n} outside the exact integer range 0..={max}")
            }
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            Error::OutsideDomain { x, lo, hi } => {
                write!(f, "position {x} outside the domain [{lo}, {hi}]")
            }
            Error::Singularity { x } => {
                write!(f, "evaluation at or beyond the singular point x = {x}")
            }
            Error::SolverFailed { what, index } => {
                write!(f, "{what}: no convergence for zero #{index}")
            }
            Error::QuadratureBudget {
                best,
                error_estimate,
            } => write!(
                f,
                "subdivision budget exhausted (best estimate {best}, error {error_estimate})"
            ),
            Error::NanIntegrand { x } => write!(f, "integrand returned NaN at x = {x}"),
            Error::DegenerateDensity => write!(f, "density integrates to zero"),
            Error::DivergentMoment => write!(f, "moment integral diverges"),
            Error::UnsupportedExponent { r } => {
                write!(f, "no closed form for exponent r = {r} (supported: 0, 1, 2)")
            }
            Error::BadInterval { lo, hi } => write!(f, "invalid interval [{lo}, {hi}]"),
            Error::Inadmissible(report) => write!(f, "density rejected: {report}"),
        }
    }
}

impl core::error::Error for Error {}
