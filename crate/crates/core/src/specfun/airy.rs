//! The Airy function Ai, its derivative, and tables of their zeros.
//!
//! Evaluation strategy: Maclaurin series for |x| ≤ 7.4, asymptotic
//! expansions beyond. The series suffers from alternating-term cancellation
//! on the negative axis and f/g cancellation on the positive axis, both of
//! which stay below ~5e−11 absolute inside the series region; the optimally
//! truncated asymptotic expansions are below ~3e−11 outside it. A crossover
//! at |x| = 5 would leave the raw negative-axis asymptotic error near 1e−6,
//! which is why the boundary sits at 7.4.
//!
//! Zeros are seeded with the leading asymptotic estimate and polished by
//! Newton iteration (with a bracketing bisection fallback), then verified by
//! a sign change of the target function around each reported zero.

use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{Error, Result};

/// Ai(0) = 3^{−2/3} / Γ(2/3).
const AI_AT_ZERO: f64 = 0.355_028_053_887_817_24;
/// Ai′(0) = −3^{−1/3} / Γ(1/3).
const AI_PRIME_AT_ZERO: f64 = -0.258_819_403_792_806_8;
/// Series/asymptotic crossover.
const SERIES_CUTOFF: f64 = 7.4;

/// Tolerances and term budget for series and iterative evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPrecision {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_terms: u32,
}

impl EvalPrecision {
    pub fn new(abs_tol: f64, rel_tol: f64, max_terms: u32) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) {
            return Err(Error::InvalidArgument("tolerances must be positive"));
        }
        if max_terms < 10 {
            return Err(Error::InvalidArgument("max_terms must be at least 10"));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_terms,
        })
    }
}

impl Default for EvalPrecision {
    fn default() -> Self {
        Self {
            abs_tol: 1e-14,
            rel_tol: 1e-14,
            max_terms: 80,
        }
    }
}

/// Ai(x) with default precision. Absolute error ≤ 1e−10 on [−15, 10];
/// sign and order of magnitude remain correct far beyond.
pub fn airy_ai(x: f64) -> f64 {
    airy_ai_with(x, &EvalPrecision::default())
}

/// Ai′(x) with default precision.
pub fn airy_ai_prime(x: f64) -> f64 {
    airy_ai_prime_with(x, &EvalPrecision::default())
}

/// Ai(x) with explicit precision control.
pub fn airy_ai_with(x: f64, prec: &EvalPrecision) -> f64 {
    if x.abs() <= SERIES_CUTOFF {
        maclaurin(x, prec).0
    } else if x > 0.0 {
        asymptotic_positive(x, prec).0
    } else {
        asymptotic_negative(-x, prec).0
    }
}

/// Ai′(x) with explicit precision control.
pub fn airy_ai_prime_with(x: f64, prec: &EvalPrecision) -> f64 {
    if x.abs() <= SERIES_CUTOFF {
        maclaurin(x, prec).1
    } else if x > 0.0 {
        asymptotic_positive(x, prec).1
    } else {
        asymptotic_negative(-x, prec).1
    }
}

/// Maclaurin series for (Ai, Ai′). The two auxiliary series
/// f = Σ x^{3k}·3^k(1/3)_k/(3k)! and g = Σ x^{3k+1}·3^k(2/3)_k/(3k+1)!
/// are accumulated together with their term-wise derivatives.
fn maclaurin(x: f64, prec: &EvalPrecision) -> (f64, f64) {
    if x == 0.0 {
        return (AI_AT_ZERO, AI_PRIME_AT_ZERO);
    }
    let x3 = x * x * x;
    let mut t = 1.0; // f-series term, starts at x^0
    let mut s = x; // g-series term, starts at x^1
    let mut f_sum = t;
    let mut g_sum = s;
    let mut fp_sum = 0.0; // d/dx of f
    let mut gp_sum = 1.0; // d/dx of g
    for k in 0..prec.max_terms {
        let kf = k as f64;
        t *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        s *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        f_sum += t;
        g_sum += s;
        // term-wise derivatives: (3k+3)·t_{k+1}/x and (3k+4)·s_{k+1}/x
        fp_sum += (3.0 * kf + 3.0) * t / x;
        gp_sum += (3.0 * kf + 4.0) * s / x;
        let scale = f_sum.abs() + g_sum.abs() + 1.0;
        if t.abs() + s.abs() < prec.abs_tol + prec.rel_tol * scale {
            break;
        }
    }
    (
        AI_AT_ZERO * f_sum + AI_PRIME_AT_ZERO * g_sum,
        AI_AT_ZERO * fp_sum + AI_PRIME_AT_ZERO * gp_sum,
    )
}

/// Coefficient recurrences of the asymptotic expansions:
/// u₀ = 1, u_{k+1} = u_k (6k+1)(6k+5) / (72(k+1)); v_k = u_k (6k+1)/(1−6k).
fn u_next(u: f64, k: u32) -> f64 {
    let kf = k as f64;
    u * (6.0 * kf + 1.0) * (6.0 * kf + 5.0) / (72.0 * (kf + 1.0))
}

fn v_of(u: f64, k: u32) -> f64 {
    let kf = k as f64;
    u * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf)
}

/// (Ai, Ai′) for large positive x:
///   Ai(x)  =  e^{−ζ}/(2√π x^{1/4}) · Σ (−1)^k u_k ζ^{−k}
///   Ai′(x) = −e^{−ζ} x^{1/4}/(2√π) · Σ (−1)^k v_k ζ^{−k}
fn asymptotic_positive(x: f64, prec: &EvalPrecision) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let pre = (-zeta).exp() / (2.0 * core::f64::consts::PI.sqrt());
    let mut u = 1.0; // u_k, starting at k = 0
    let mut sum_ai = 1.0;
    let mut sum_aip = 1.0; // v₀ = 1
    let mut sign = 1.0;
    let mut prev_mag = 1.0;
    for k in 0..prec.max_terms {
        let next_u = u_next(u, k);
        let mag = next_u / zeta.powi(k as i32 + 1);
        if mag.abs() >= prev_mag {
            break; // divergent tail of the asymptotic series
        }
        prev_mag = mag.abs();
        sign = -sign;
        sum_ai += sign * mag;
        sum_aip += sign * v_of(next_u, k + 1) / zeta.powi(k as i32 + 1);
        u = next_u;
        if mag.abs() < prec.abs_tol + prec.rel_tol * sum_ai.abs() {
            break;
        }
    }
    (pre / x.powf(0.25) * sum_ai, -pre * x.powf(0.25) * sum_aip)
}

/// (Ai, Ai′) on the oscillatory side. With t = |x|, ζ = (2/3)t^{3/2} and
/// θ = ζ + π/4:
///   Ai(−t)  =  (sinθ·Pu − cosθ·Qu) / (√π t^{1/4})
///   Ai′(−t) = −(cosθ·Pv + sinθ·Qv) · t^{1/4} / √π
/// where Pu/Qu collect even/odd u-terms and Pv/Qv the v-terms.
fn asymptotic_negative(t: f64, prec: &EvalPrecision) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * t.powf(1.5);
    let theta = zeta + core::f64::consts::FRAC_PI_4;
    let (sin_t, cos_t) = theta.sin_cos();
    let mut pu = 0.0;
    let mut qu = 0.0;
    let mut pv = 0.0;
    let mut qv = 0.0;
    let mut u = 1.0;
    let mut prev_mag = f64::INFINITY;
    for k in 0..prec.max_terms {
        let term = u / zeta.powi(k as i32);
        if term.abs() >= prev_mag {
            break;
        }
        prev_mag = term.abs();
        let vterm = v_of(u, k) / zeta.powi(k as i32);
        if k % 2 == 0 {
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            pu += sign * term;
            pv += sign * vterm;
        } else {
            let sign = if ((k - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            qu += sign * term;
            qv += sign * vterm;
        }
        if term.abs() < prec.abs_tol {
            break;
        }
        u = u_next(u, k);
    }
    let pre = 1.0 / core::f64::consts::PI.sqrt();
    (
        pre / t.powf(0.25) * (sin_t * pu - cos_t * qu),
        -pre * t.powf(0.25) * (cos_t * pv + sin_t * qv),
    )
}

/// Which function's zeros a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiryZeroKind {
    /// Zeros of Ai itself.
    Ai,
    /// Zeros of the derivative Ai′.
    AiDerivative,
}

/// Ordered magnitudes y_k > 0 with Ai(−y_k) = 0 (or Ai′(−y_k) = 0).
#[derive(Debug, Clone, PartialEq)]
pub struct AiryZeroTable {
    kind: AiryZeroKind,
    zeros: Vec<f64>,
}

impl AiryZeroTable {
    pub fn kind(&self) -> AiryZeroKind {
        self.kind
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    /// Magnitude of the k-th zero (1-based).
    pub fn zero(&self, k: usize) -> Option<f64> {
        (k >= 1).then(|| self.zeros.get(k - 1).copied()).flatten()
    }
}

/// Leading asymptotic estimate for the k-th zero magnitude.
pub(crate) fn zero_seed(kind: AiryZeroKind, k: u32) -> f64 {
    let offset = match kind {
        AiryZeroKind::Ai => 4.0 * k as f64 - 1.0,
        AiryZeroKind::AiDerivative => 4.0 * k as f64 - 3.0,
    };
    (3.0 * core::f64::consts::PI * offset / 8.0).powf(2.0 / 3.0)
}

/// Computes the first `count` zero magnitudes of Ai or Ai′.
pub fn airy_zeros(kind: AiryZeroKind, count: u32) -> Result<AiryZeroTable> {
    if count < 1 {
        return Err(Error::InvalidArgument("zero count must be at least 1"));
    }
    let prec = EvalPrecision::default();
    let mut zeros = Vec::with_capacity(count as usize);
    for k in 1..=count {
        let y = refine_zero(kind, k, &prec)?;
        zeros.push(y);
    }
    Ok(AiryZeroTable { kind, zeros })
}

fn target(kind: AiryZeroKind, y: f64, prec: &EvalPrecision) -> f64 {
    match kind {
        AiryZeroKind::Ai => airy_ai_with(-y, prec),
        AiryZeroKind::AiDerivative => airy_ai_prime_with(-y, prec),
    }
}

/// d/dy of the target. Ai″(x) = x·Ai(x) turns the derivative-zero case
/// into a plain product, no second-derivative code needed.
fn target_slope(kind: AiryZeroKind, y: f64, prec: &EvalPrecision) -> f64 {
    match kind {
        AiryZeroKind::Ai => -airy_ai_prime_with(-y, prec),
        AiryZeroKind::AiDerivative => y * airy_ai_with(-y, prec),
    }
}

fn refine_zero(kind: AiryZeroKind, k: u32, prec: &EvalPrecision) -> Result<f64> {
    let what = match kind {
        AiryZeroKind::Ai => "airy zero refinement",
        AiryZeroKind::AiDerivative => "airy derivative zero refinement",
    };
    let seed = zero_seed(kind, k);
    let lo_limit = (seed - 1.5).max(0.05);
    let hi_limit = seed + 1.5;

    let mut y = seed;
    let mut converged = false;
    for _ in 0..60 {
        let f = target(kind, y, prec);
        let fp = target_slope(kind, y, prec);
        if fp == 0.0 {
            break;
        }
        let step = f / fp;
        y -= step;
        if !(lo_limit..=hi_limit).contains(&y) {
            break; // Newton escaped the expected bracket
        }
        if step.abs() <= 1e-14 * y.max(1.0) {
            converged = true;
            break;
        }
    }

    if !converged || !verify_sign_change(kind, y, prec) {
        y = bisect_zero(kind, k, lo_limit, hi_limit, prec)?;
        if !verify_sign_change(kind, y, prec) {
            return Err(Error::SolverFailed {
                what,
                index: k as usize,
            });
        }
    }
    Ok(y)
}

fn verify_sign_change(kind: AiryZeroKind, y: f64, prec: &EvalPrecision) -> bool {
    let delta = 1e-7 * y.max(1.0);
    let a = target(kind, y - delta, prec);
    let b = target(kind, y + delta, prec);
    a * b < 0.0
}

fn bisect_zero(
    kind: AiryZeroKind,
    k: u32,
    lo_limit: f64,
    hi_limit: f64,
    prec: &EvalPrecision,
) -> Result<f64> {
    let what = match kind {
        AiryZeroKind::Ai => "airy zero bisection",
        AiryZeroKind::AiDerivative => "airy derivative zero bisection",
    };
    // scan for a sign change inside the bracket
    let n_scan = 256;
    let mut lo = lo_limit;
    let mut flo = target(kind, lo, prec);
    let mut hi = lo;
    let mut found = false;
    for i in 1..=n_scan {
        hi = lo_limit + (hi_limit - lo_limit) * i as f64 / n_scan as f64;
        let fhi = target(kind, hi, prec);
        if flo == 0.0 {
            return Ok(lo);
        }
        if flo * fhi < 0.0 {
            found = true;
            break;
        }
        lo = hi;
        flo = fhi;
    }
    if !found {
        return Err(Error::SolverFailed {
            what,
            index: k as usize,
        });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-15 * mid.max(1.0) {
            return Ok(mid);
        }
        let fmid = target(kind, mid, prec);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_origin() {
        assert!((airy_ai(0.0) - 0.3550280539).abs() < 1e-10);
        assert!((airy_ai_prime(0.0) + 0.2588194038).abs() < 1e-10);
    }

    #[test]
    fn decays_on_positive_axis() {
        let v = airy_ai(20.0);
        assert!(v > 0.0);
        assert!(v < 1e-12);
        // monotone decay across the crossover
        assert!(airy_ai(6.0) > airy_ai(8.0));
        assert!(airy_ai(8.0) > airy_ai(10.0));
    }

    #[test]
    fn series_and_asymptotic_agree_in_overlap() {
        let prec = EvalPrecision::default();
        // positive overlap
        for i in 0..=20 {
            let x = 5.5 + i as f64 * 0.09;
            let s = maclaurin(x, &prec);
            let a = asymptotic_positive(x, &prec);
            assert!((s.0 - a.0).abs() < 1e-10, "Ai mismatch at {x}: {} {}", s.0, a.0);
            assert!((s.1 - a.1).abs() < 1e-9, "Ai' mismatch at {x}: {} {}", s.1, a.1);
        }
        // negative overlap
        for i in 0..=20 {
            let t = 6.2 + i as f64 * 0.06;
            let s = maclaurin(-t, &prec);
            let a = asymptotic_negative(t, &prec);
            assert!((s.0 - a.0).abs() < 1e-10, "Ai mismatch at -{t}: {} {}", s.0, a.0);
            assert!((s.1 - a.1).abs() < 1e-9, "Ai' mismatch at -{t}: {} {}", s.1, a.1);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let h = 1e-6;
        for &x in &[-12.0, -9.0, -6.5, -3.0, -1.0, 0.4, 2.0, 5.0, 9.0] {
            let fd = (airy_ai(x + h) - airy_ai(x - h)) / (2.0 * h);
            let an = airy_ai_prime(x);
            assert!((fd - an).abs() < 2e-6 * (1.0 + an.abs()), "x={x}: {fd} vs {an}");
        }
    }

    #[test]
    fn satisfies_airy_ode() {
        // second difference of Ai against x·Ai
        let h = 1e-4;
        for &x in &[-10.0, -4.0, -1.3, 0.0, 2.2, 6.0] {
            let second = (airy_ai(x + h) - 2.0 * airy_ai(x) + airy_ai(x - h)) / (h * h);
            assert!(
                (second - x * airy_ai(x)).abs() < 1e-5,
                "ODE residual too large at {x}"
            );
        }
    }

    #[test]
    fn first_zero_location() {
        let table = airy_zeros(AiryZeroKind::Ai, 1).unwrap();
        assert!((table.zero(1).unwrap() - 2.33811).abs() < 1e-5);
        assert!(airy_ai(-table.zero(1).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn first_derivative_zero_location() {
        let table = airy_zeros(AiryZeroKind::AiDerivative, 1).unwrap();
        assert!((table.zero(1).unwrap() - 1.01879).abs() < 1e-4);
    }

    #[test]
    fn zeros_strictly_increasing_and_near_seed() {
        let table = airy_zeros(AiryZeroKind::Ai, 20).unwrap();
        let zeros = table.zeros();
        for k in 1..zeros.len() {
            assert!(zeros[k] > zeros[k - 1]);
        }
        for (i, &y) in zeros.iter().enumerate() {
            let est = zero_seed(AiryZeroKind::Ai, i as u32 + 1);
            assert!(
                (y - est).abs() / est < 0.05,
                "zero {} = {y} not within 5% of estimate {est}",
                i + 1
            );
            assert!(airy_ai(-y).abs() < 1e-9);
        }
    }

    #[test]
    fn derivative_zeros_interlace() {
        let ai = airy_zeros(AiryZeroKind::Ai, 12).unwrap();
        let aip = airy_zeros(AiryZeroKind::AiDerivative, 12).unwrap();
        for k in 0..12 {
            assert!(
                aip.zeros()[k] < ai.zeros()[k],
                "derivative zero {} does not precede the Ai zero",
                k + 1
            );
            if k > 0 {
                assert!(aip.zeros()[k] > ai.zeros()[k - 1]);
            }
        }
    }

    #[test]
    fn zero_count_validation() {
        assert!(airy_zeros(AiryZeroKind::Ai, 0).is_err());
        let t = airy_zeros(AiryZeroKind::Ai, 3).unwrap();
        assert_eq!(t.zeros().len(), 3);
    }

    #[test]
    fn precision_validation() {
        assert!(EvalPrecision::new(1e-12, 1e-12, 40).is_ok());
        assert!(EvalPrecision::new(0.0, 1e-12, 40).is_err());
        assert!(EvalPrecision::new(1e-12, 1e-12, 5).is_err());
    }
}
