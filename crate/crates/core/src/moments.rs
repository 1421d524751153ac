//! Moments ⟨xᵏ⟩ₙ of exclusion densities, their closed forms, and
//! convergence sweeps toward the continuum values.
//!
//! Two families of closed forms are implemented:
//!
//! * sinusoidal densities λ·sin²(nπx/l) on a bar for λ ∝ 1, x, x²;
//! * the half-line oscillator density, whose k-th moment is C_{n,k}·lᵏ
//!   with C_{n,2} = ½ for every n, a rational C_{n,4}, and a factorial
//!   C_{n,1} that tends to 2/π.
//!
//! Every closed form is gate-checked against quadrature in the test suite
//! before anything downstream relies on it. One first-moment variant
//! ([`half_line_first_moment_uncorrected`]) is deliberately kept in its
//! original even-branch form, which overshoots quadrature by the factor
//! 2(2m+1)/(4m+1); the verification suite reports that discrepancy rather
//! than hiding the variant.

use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::exclusion::ExclusionDensity;
use crate::mass_density::MassDensity;
use crate::potentials::{Eigenstate, Parity, PotentialKind, PotentialSpec};
use crate::quadrature::{integrate, IntegrationRequest};
use crate::specfun::{hermite_weighted, ln_gamma};

/// How a moment value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentMethod {
    Quadrature,
    ClosedForm,
}

/// One ⟨xᵏ⟩ₙ record with its continuum limit and the gap to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResult {
    pub n: u32,
    pub order: u32,
    pub value: f64,
    pub method: MomentMethod,
    pub continuum_limit: f64,
    pub gap: f64,
}

/// Dimensionless coefficient C_{n,k} in ⟨xᵏ⟩ₙ = C_{n,k}·lᵏ for the
/// half-line oscillator density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentCoefficient {
    pub n: u32,
    pub order: u32,
    pub value: f64,
}

/// ⟨xᵏ⟩ of an exclusion density by quadrature, with the continuum moment
/// of its mass density attached.
pub fn moment(density: &ExclusionDensity, k: u32) -> Result<MomentResult> {
    let (lo, hi) = density.domain();
    let (sing_lo, sing_hi) = density.singular_flags();
    let mut req = IntegrationRequest::new(|x: f64| x.powi(k as i32) * density.weight(x), lo, hi)
        .tolerance(1e-12)
        .nodes_hint(density.state().node_count() + 1);
    if sing_lo {
        req = req.singular_at_lower();
    }
    if sing_hi {
        req = req.singular_at_upper();
    }
    let raw = integrate(req)?;
    let value = density.normalization() * raw.value;
    let continuum_limit = density.mass_density().continuum_moment(k)?;
    Ok(MomentResult {
        n: density.state().quantum_number(),
        order: k,
        value,
        method: MomentMethod::Quadrature,
        continuum_limit,
        gap: (value - continuum_limit).abs(),
    })
}

/// Exact mean of the bar density xʳ·sin²(nπx/l) on [0, l] for r ∈ {0,1,2}:
///
/// * r = 0: l/2 for every n;
/// * r = 1: (2l/3)·(1 − 3/(2n²π²));
/// * r = 2: (3l/4)·(1 − 3/(n²π²)) / (1 − 3/(2n²π²)).
pub fn sinusoid_mean_closed(r: u32, n: u32, l: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidArgument("sinusoidal states start at n = 1"));
    }
    if !(l > 0.0) {
        return Err(Error::InvalidArgument("bar length must be positive"));
    }
    let u = (n as f64 * core::f64::consts::PI).powi(2);
    match r {
        0 => Ok(l / 2.0),
        1 => Ok(2.0 * l / 3.0 * (1.0 - 1.5 / u)),
        2 => Ok(3.0 * l / 4.0 * (1.0 - 3.0 / u) / (1.0 - 1.5 / u)),
        _ => Err(Error::UnsupportedExponent { r }),
    }
}

/// C_{n,k} by semi-infinite quadrature of the weight-normalized state:
/// C_{n,k} = 2·(2n+1)^{−k/2} ∫₀^∞ yᵏ φₙ(y)² dy.
pub fn half_line_moment_coefficient(n: u32, k: u32) -> Result<MomentCoefficient> {
    let integral = integrate(
        IntegrationRequest::new(
            |y: f64| {
                let phi = hermite_weighted(n, y);
                y.powi(k as i32) * phi * phi
            },
            0.0,
            f64::INFINITY,
        )
        .tolerance(1e-12)
        .gaussian_tail(1.0, (2 * n + k) as f64)
        .nodes_hint(n + 1),
    )?;
    let value = 2.0 * (2.0 * n as f64 + 1.0).powf(-(k as f64) / 2.0) * integral.value;
    Ok(MomentCoefficient { n, order: k, value })
}

/// Closed-form C_{n,1}, assembled from the boundary-term expansion of
/// ∫₀^∞ y e^{−y²} Hₙ² dy and evaluated in log space:
///
/// * n = 2m:     √(4m+1) · (2m)! / (√π 4^m (m!)²)
/// * n = 2m+1:   2(2m+1) · (2m)! / (√π √(4m+3) 4^m (m!)²)
///
/// Both branches tend to 2/π. The test suite verifies this form against
/// [`half_line_moment_coefficient`] before anything uses it.
pub fn half_line_first_moment(n: u32) -> f64 {
    let m = (n / 2) as f64;
    let ln_ratio = ln_gamma(2.0 * m + 1.0)
        - 2.0 * m * core::f64::consts::LN_2
        - 2.0 * ln_gamma(m + 1.0)
        - 0.5 * core::f64::consts::PI.ln();
    if n % 2 == 0 {
        (0.5 * (4.0 * m + 1.0).ln() + ln_ratio).exp()
    } else {
        (core::f64::consts::LN_2 + (2.0 * m + 1.0).ln() - 0.5 * (4.0 * m + 3.0).ln() + ln_ratio)
            .exp()
    }
}

/// The earlier closed-form variant of C_{n,1}. Its odd branch coincides
/// with [`half_line_first_moment`]; its even branch carries the spurious
/// factor 2(2m+1)/(4m+1) (exactly 2 at n = 0) while sharing the same 2/π
/// limit. Kept so verification can report the measured discrepancy.
pub fn half_line_first_moment_uncorrected(n: u32) -> f64 {
    let m = (n / 2) as f64;
    let ln_ratio = ln_gamma(2.0 * m + 1.0)
        - 2.0 * m * core::f64::consts::LN_2
        - 2.0 * ln_gamma(m + 1.0)
        - 0.5 * core::f64::consts::PI.ln();
    let root = if n % 2 == 0 { 4.0 * m + 1.0 } else { 4.0 * m + 3.0 };
    (core::f64::consts::LN_2 + (2.0 * m + 1.0).ln() - 0.5 * root.ln() + ln_ratio).exp()
}

/// Closed-form fourth moment of the half-line oscillator density:
/// ⟨x⁴⟩ₙ = (3/2)·(n² + n + ½)/(2n+1)² · l⁴, with limit (3/8)·l⁴.
pub fn half_line_fourth_moment(n: u32, l: f64) -> f64 {
    let nf = n as f64;
    let c = 1.5 * (nf * nf + nf + 0.5) / ((2.0 * nf + 1.0) * (2.0 * nf + 1.0));
    c * l.powi(4)
}

/// Builds the exclusion density for each quantum number and reports the
/// moment with its gap to the continuum value. Failures are per-entry so a
/// single bad state does not abort the sweep. Bouncer sweeps use the odd
/// (Ai-zero) family.
pub fn convergence_sweep(
    density: &MassDensity,
    potential: &PotentialSpec,
    k: u32,
    ns: &[u32],
) -> Vec<Result<MomentResult>> {
    ns.iter()
        .map(|&n| {
            let state = match potential.kind() {
                PotentialKind::LinearBouncer { .. } => {
                    Eigenstate::bouncer(*potential, n, Parity::Odd)
                }
                _ => Eigenstate::new(*potential, n),
            }?;
            let ed = ExclusionDensity::build(density.clone(), state)?;
            moment(&ed, k)
        })
        .collect()
}
