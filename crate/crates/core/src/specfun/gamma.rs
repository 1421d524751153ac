//! Gamma-function helpers, Gaussian power integrals, and the exact
//! factorial identities used by the closed-form moment expressions.

use num_traits::Float;

use crate::error::{Error, Result};

/// Largest `n` for which the factorial identity is evaluated in exact
/// integer arithmetic (all intermediate terms fit in `u128`).
const EXACT_IDENTITY_MAX: u32 = 20;

/// Natural logarithm of the Gamma function for positive arguments.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Gamma function Γ(x).
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// ln(n!) via the log-Gamma function.
///
/// Exact to the last bit for n ≤ 20 would require integer arithmetic; the
/// log form is accurate to ~1e-15 relative everywhere, which is what the
/// factorial-ratio callers need for large n.
pub fn ln_factorial(n: u64) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

/// ∫₀^∞ xᵐ e^{−a x²} dx = Γ((m+1)/2) / (2 a^{(m+1)/2}).
///
/// Errors with [`Error::InvalidArgument`] when `a ≤ 0`.
pub fn gaussian_power_integral(m: u32, a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::InvalidArgument("decay rate a must be positive"));
    }
    let half = (m as f64 + 1.0) / 2.0;
    Ok(gamma(half) / (2.0 * a.powf(half)))
}

/// Exact binomial coefficient in `u128` arithmetic.
fn binomial_u128(n: u32, k: u32) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (n as u128 - k as u128 + i) / i;
    }
    acc
}

/// Checks the combinatorial identity
/// Σ_{k=0}^{n} [2(n−k)]! / [(n−k)!]² · 2^{2k}  =  (2n+1)! / (n!)²
/// in exact integer arithmetic.
///
/// Both sides reduce to central binomial coefficients, so every term fits
/// in `u128` for n ≤ 20. Larger n returns [`Error::OutsideExactRange`].
pub fn factorial_identity_check(n: u32) -> Result<bool> {
    if n > EXACT_IDENTITY_MAX {
        return Err(Error::OutsideExactRange {
            n,
            max: EXACT_IDENTITY_MAX,
        });
    }
    // [2j]!/(j!)² = C(2j, j); the k-th term is C(2(n−k), n−k)·4^k.
    let mut lhs: u128 = 0;
    for k in 0..=n {
        let j = n - k;
        lhs += binomial_u128(2 * j, j) * 4u128.pow(k);
    }
    let rhs = (2 * n as u128 + 1) * binomial_u128(2 * n, n);
    Ok(lhs == rhs)
}

/// √n · (2n)! / (2^{2n} (n!)²), computed in log space.
///
/// Monotonically increasing in n with limit 1/√π.
pub fn stirling_ratio(n: u64) -> f64 {
    let nf = n as f64;
    let log = 0.5 * nf.ln() + ln_factorial(2 * n) - 2.0 * nf * core::f64::consts::LN_2
        - 2.0 * ln_factorial(n);
    log.exp()
}
