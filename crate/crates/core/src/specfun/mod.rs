//! Self-contained special-function kernel.
//!
//! Hermite polynomials in raw and weight-normalized form, the Airy function
//! Ai with its zeros, Gamma-moment integrals of Gaussian type, and the exact
//! combinatorial/asymptotic identities the moment pipeline relies on.
//!
//! Everything here is a pure function of its inputs; the zero tables are
//! immutable after construction and safe to share across threads.

mod airy;
mod gamma;
mod hermite;

pub use airy::{
    airy_ai, airy_ai_prime, airy_ai_prime_with, airy_ai_with, airy_zeros, AiryZeroKind,
    AiryZeroTable, EvalPrecision,
};
pub use gamma::{
    factorial_identity_check, gamma, gaussian_power_integral, ln_factorial, ln_gamma,
    stirling_ratio,
};
pub use hermite::{
    hermite, hermite_at_zero, hermite_squared_first_moment, hermite_weighted,
    hermite_weighted_derivative, HermiteMode, HermiteTable, RAW_ORDER_MAX,
};
