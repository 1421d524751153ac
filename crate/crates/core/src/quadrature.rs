//! Adaptive one-dimensional integration.
//!
//! A 7/15-point Gauss–Kronrod pair supplies the local value and error
//! estimate; intervals whose estimate misses their share of the tolerance
//! are bisected, up to [`MAX_SUBDIVISIONS`] splits.
//!
//! Two non-smooth situations get explicit treatment:
//!
//! * inverse-square-root endpoint singularities are removed exactly by the
//!   substitution x = endpoint ∓ u² before any subdivision happens;
//! * semi-infinite Gaussian-weighted integrands are truncated at a bound
//!   where the analytic tail estimate |x|^d e^{−αx²} drops below a tenth of
//!   the tolerance, with the bound solved iteratively so polynomial growth
//!   of high-order Hermite factors cannot defeat a fixed cutoff.
//!
//! Oscillatory integrands should pass the expected node count via
//! [`IntegrationRequest::nodes_hint`]; the initial partition then seeds at
//! least eight panels per node so adaptive refinement cannot step over
//! narrow lobes.

use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{Error, Result};

/// Hard cap on interval splits for a single request.
pub const MAX_SUBDIVISIONS: u32 = 1 << 20;

/// Default absolute tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Decay profile |x|^degree · e^{−decay·x²} used to place the truncation
/// bound of a semi-infinite integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianTail {
    pub decay: f64,
    pub poly_degree: f64,
}

impl Default for GaussianTail {
    fn default() -> Self {
        Self {
            decay: 1.0,
            poly_degree: 0.0,
        }
    }
}

/// A single integration task. Build with [`IntegrationRequest::new`] and the
/// chained setters; infinite endpoints are expressed with `f64::INFINITY` /
/// `f64::NEG_INFINITY` (at most one per request).
pub struct IntegrationRequest<F> {
    integrand: F,
    lower: f64,
    upper: f64,
    singular_at_lower: bool,
    singular_at_upper: bool,
    tolerance: f64,
    nodes_hint: u32,
    tail: Option<GaussianTail>,
}

impl<F: Fn(f64) -> f64> IntegrationRequest<F> {
    pub fn new(integrand: F, lower: f64, upper: f64) -> Self {
        Self {
            integrand,
            lower,
            upper,
            singular_at_lower: false,
            singular_at_upper: false,
            tolerance: DEFAULT_TOLERANCE,
            nodes_hint: 0,
            tail: None,
        }
    }

    /// Declares an inverse-square-root (or milder) singularity at the lower endpoint.
    pub fn singular_at_lower(mut self) -> Self {
        self.singular_at_lower = true;
        self
    }

    /// Declares an inverse-square-root (or milder) singularity at the upper endpoint.
    pub fn singular_at_upper(mut self) -> Self {
        self.singular_at_upper = true;
        self
    }

    /// Absolute error target.
    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    /// Expected count of integrand zeros; seeds the initial partition.
    pub fn nodes_hint(mut self, nodes: u32) -> Self {
        self.nodes_hint = nodes;
        self
    }

    /// Tail profile for an infinite endpoint (defaults to a plain Gaussian).
    pub fn gaussian_tail(mut self, decay: f64, poly_degree: f64) -> Self {
        self.tail = Some(GaussianTail { decay, poly_degree });
        self
    }
}

/// Value, accumulated error estimate, and split count for one request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: u32,
}

/// Runs an [`IntegrationRequest`].
pub fn integrate<F: Fn(f64) -> f64>(req: IntegrationRequest<F>) -> Result<IntegrationResult> {
    if !(req.tolerance > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive"));
    }
    if req.lower.is_nan() || req.upper.is_nan() || !(req.lower < req.upper) {
        return Err(Error::BadInterval {
            lo: req.lower,
            hi: req.upper,
        });
    }
    if req.lower.is_infinite() && req.upper.is_infinite() {
        return Err(Error::InvalidArgument(
            "at most one infinite endpoint per request",
        ));
    }
    if (req.singular_at_lower && req.lower.is_infinite())
        || (req.singular_at_upper && req.upper.is_infinite())
    {
        return Err(Error::InvalidArgument(
            "singularity flags apply to finite endpoints only",
        ));
    }

    let f = &req.integrand;
    if req.lower.is_infinite() {
        // mirror onto a lower-bounded interval
        let mirrored = move |u: f64| f(-u);
        let bound = truncation_bound(req.tail.unwrap_or_default(), req.tolerance);
        return truncated(
            &mirrored,
            -req.upper,
            bound,
            req.singular_at_upper,
            &req,
        );
    }
    if req.upper.is_infinite() {
        let bound = truncation_bound(req.tail.unwrap_or_default(), req.tolerance);
        return truncated(f, req.lower, bound, req.singular_at_lower, &req);
    }
    finite(
        f,
        req.lower,
        req.upper,
        req.singular_at_lower,
        req.singular_at_upper,
        req.tolerance,
        req.nodes_hint,
    )
}

/// Semi-infinite case after mirroring: integrate [lo, bound] and account for
/// the discarded tail in the error estimate.
fn truncated<F: Fn(f64) -> f64, G>(
    f: &G,
    lo: f64,
    bound: f64,
    singular_lo: bool,
    req: &IntegrationRequest<F>,
) -> Result<IntegrationResult>
where
    G: Fn(f64) -> f64 + ?Sized,
{
    let hi = bound.max(lo + 1.0);
    let mut out = finite(f, lo, hi, singular_lo, false, req.tolerance, req.nodes_hint)?;
    out.error_estimate += req.tolerance / 10.0;
    Ok(out)
}

/// Solves decay·B² − degree·ln(B) ≥ ln(10/tol) for the truncation bound,
/// starting beyond the mode of |x|^d e^{−αx²} so iteration converges from
/// the correct side.
fn truncation_bound(tail: GaussianTail, tol: f64) -> f64 {
    let alpha = tail.decay.max(1e-300);
    let d = tail.poly_degree.max(0.0);
    let target = (10.0 / tol).ln();
    let mode = (d / (2.0 * alpha)).sqrt();
    let mut b = mode + ((target + d) / alpha).sqrt() + 2.0;
    for _ in 0..48 {
        let next = ((target + d * b.max(1.0).ln()) / alpha).sqrt();
        b = next.max(mode + 1.0);
    }
    b * 1.05
}

fn finite(
    f: &(impl Fn(f64) -> f64 + ?Sized),
    lo: f64,
    hi: f64,
    singular_lo: bool,
    singular_hi: bool,
    tol: f64,
    nodes: u32,
) -> Result<IntegrationResult> {
    match (singular_lo, singular_hi) {
        (false, false) => adaptive(f, lo, hi, tol, nodes),
        (true, false) => {
            // x = lo + u², dx = 2u du
            let g = |u: f64| 2.0 * u * f(lo + u * u);
            adaptive(&g, 0.0, (hi - lo).sqrt(), tol, nodes)
        }
        (false, true) => {
            // x = hi − u², dx = −2u du (orientation absorbed by swapping limits)
            let g = |u: f64| 2.0 * u * f(hi - u * u);
            adaptive(&g, 0.0, (hi - lo).sqrt(), tol, nodes)
        }
        (true, true) => {
            let mid = 0.5 * (lo + hi);
            let left = finite(f, lo, mid, true, false, tol / 2.0, nodes / 2)?;
            let right = finite(f, mid, hi, false, true, tol / 2.0, nodes / 2)?;
            Ok(IntegrationResult {
                value: left.value + right.value,
                error_estimate: left.error_estimate + right.error_estimate,
                subdivisions: left.subdivisions + right.subdivisions,
            })
        }
    }
}

/// Adaptive bisection driver over an explicit worklist.
fn adaptive(
    f: &(impl Fn(f64) -> f64 + ?Sized),
    lo: f64,
    hi: f64,
    tol: f64,
    nodes: u32,
) -> Result<IntegrationResult> {
    let total_width = hi - lo;
    if !(total_width > 0.0) {
        return Ok(IntegrationResult {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 0,
        });
    }
    let panels = if nodes == 0 {
        1
    } else {
        (8 * (nodes as usize + 1)).min(4096)
    };
    let mut stack: Vec<(f64, f64)> = Vec::with_capacity(panels + 64);
    for i in (0..panels).rev() {
        let a = lo + total_width * i as f64 / panels as f64;
        let b = lo + total_width * (i + 1) as f64 / panels as f64;
        stack.push((a, b));
    }

    let mut value = 0.0;
    let mut error = 0.0;
    let mut splits: u32 = 0;
    let mut exhausted = false;
    while let Some((a, b)) = stack.pop() {
        let (v, e) = gk15(f, a, b)?;
        let local_tol = tol * (b - a) / total_width;
        let width_floor = (b - a) <= 1e-14 * total_width;
        if e <= local_tol || width_floor || exhausted {
            value += v;
            error += e;
        } else if splits >= MAX_SUBDIVISIONS {
            exhausted = true;
            value += v;
            error += e;
        } else {
            splits += 1;
            let mid = 0.5 * (a + b);
            stack.push((mid, b));
            stack.push((a, mid));
        }
    }
    if exhausted {
        return Err(Error::QuadratureBudget {
            best: value,
            error_estimate: error,
        });
    }
    Ok(IntegrationResult {
        value,
        error_estimate: error,
        subdivisions: splits,
    })
}

// 15-point Kronrod abscissae on [-1, 1] (positive half) with the embedded
// 7-point Gauss rule on the odd-indexed nodes. QUADPACK QK15 constants.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_20,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// One Gauss–Kronrod 15/7 evaluation; returns (value, scaled error estimate).
fn gk15(f: &(impl Fn(f64) -> f64 + ?Sized), a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_nan() {
            Err(Error::NanIntegrand { x })
        } else {
            Ok(v)
        }
    };

    let f_center = eval(center)?;
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut res_abs = kronrod.abs();
    let mut samples = [(0.0f64, 0.0f64); 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        samples[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((samples[j].0 - mean).abs() + (samples[j].1 - mean).abs());
    }

    let value = kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let raw_err = ((kronrod - gauss) * half).abs();
    Ok((value, rescale_error(raw_err, res_abs, res_asc)))
}

/// QUADPACK error rescaling: sharpens the raw |K−G| difference and floors
/// it at the round-off level of the function values involved.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * res_abs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

/// ∫ weight·density / ∫ density over `domain`, both at the same absolute
/// tolerance, so callers never have to normalize the density themselves.
pub fn mean_ratio(
    weight: impl Fn(f64) -> f64,
    density: impl Fn(f64) -> f64,
    domain: (f64, f64),
    tolerance: f64,
) -> Result<f64> {
    let (lo, hi) = domain;
    let den = integrate(IntegrationRequest::new(&density, lo, hi).tolerance(tolerance))?;
    if !(den.value > 10.0 * tolerance) {
        return Err(Error::DegenerateDensity);
    }
    let num = integrate(
        IntegrationRequest::new(|x| weight(x) * density(x), lo, hi).tolerance(tolerance),
    )?;
    Ok(num.value / den.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn run<F: Fn(f64) -> f64>(req: IntegrationRequest<F>) -> f64 {
        integrate(req).unwrap().value
    }

    #[test]
    fn constant_over_unit_interval() {
        assert!((run(IntegrationRequest::new(|_| 1.0, 0.0, 1.0)) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn inverse_sqrt_upper_singularity() {
        let v = run(IntegrationRequest::new(|x: f64| 1.0 / (1.0 - x).sqrt(), 0.0, 1.0)
            .singular_at_upper());
        assert!((v - 2.0).abs() < 1e-11);
    }

    #[test]
    fn inverse_sqrt_lower_singularity() {
        let v = run(
            IntegrationRequest::new(|x: f64| 1.0 / x.sqrt(), 0.0, 4.0).singular_at_lower(),
        );
        assert!((v - 4.0).abs() < 1e-11);
    }

    #[test]
    fn double_singularity_arcsine_density() {
        // ∫ 1/(π√(1−x²)) over (−1,1) = 1
        let v = run(
            IntegrationRequest::new(|x: f64| 1.0 / (PI * (1.0 - x * x).sqrt()), -1.0, 1.0)
                .singular_at_lower()
                .singular_at_upper(),
        );
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn gaussian_over_half_line() {
        let v = run(IntegrationRequest::new(
            |x: f64| (-x * x).exp(),
            0.0,
            f64::INFINITY,
        ));
        assert!((v - PI.sqrt() / 2.0).abs() < 1e-11);
    }

    #[test]
    fn gaussian_over_negative_half_line() {
        let v = run(IntegrationRequest::new(
            |x: f64| (-x * x).exp(),
            f64::NEG_INFINITY,
            0.0,
        ));
        assert!((v - PI.sqrt() / 2.0).abs() < 1e-11);
    }

    #[test]
    fn polynomial_weighted_gaussian_tail() {
        // ∫₀^∞ x^40 e^{−x²} dx = Γ(20.5)/2; the polynomial pushes the mass
        // out to x ≈ 4.5, which a fixed short cutoff would miss.
        let exact = libm::tgamma(20.5) / 2.0;
        let v = run(
            IntegrationRequest::new(|x: f64| x.powi(40) * (-x * x).exp(), 0.0, f64::INFINITY)
                .gaussian_tail(1.0, 40.0)
                .tolerance(1e-8 * exact),
        );
        assert!((v - exact).abs() < 1e-7 * exact);
    }

    #[test]
    fn oscillatory_with_node_hint() {
        // ∫₀¹ sin²(80πx) dx = 1/2
        let v = run(
            IntegrationRequest::new(|x: f64| (80.0 * PI * x).sin().powi(2), 0.0, 1.0)
                .nodes_hint(80),
        );
        assert!((v - 0.5).abs() < 1e-10);
    }

    #[test]
    fn nan_integrand_reports_abscissa() {
        let err = integrate(IntegrationRequest::new(
            |x: f64| if x > 0.5 { f64::NAN } else { 1.0 },
            0.0,
            1.0,
        ))
        .unwrap_err();
        match err {
            Error::NanIntegrand { x } => assert!(x > 0.5),
            other => panic!("expected NaN error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_requests() {
        assert!(matches!(
            integrate(IntegrationRequest::new(|_| 1.0, 1.0, 0.0)),
            Err(Error::BadInterval { .. })
        ));
        assert!(integrate(IntegrationRequest::new(|_| 1.0, 0.0, 1.0).tolerance(0.0)).is_err());
        assert!(integrate(IntegrationRequest::new(
            |_| 1.0,
            f64::NEG_INFINITY,
            f64::INFINITY
        ))
        .is_err());
    }

    #[test]
    fn budget_exhaustion_carries_best_estimate() {
        // |x−1/3|^{−0.9} is integrable but too sharp for an undeclared
        // singularity at the requested tolerance.
        let res = integrate(
            IntegrationRequest::new(|x: f64| (x - 1.0 / 3.0).abs().powf(-0.9), 0.0, 1.0)
                .tolerance(1e-13),
        );
        match res {
            Err(Error::QuadratureBudget { best, .. }) => assert!(best.is_finite()),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn mean_ratio_simple_weights() {
        // uniform density on [0,1]
        let m = mean_ratio(|x| x, |_| 1.0, (0.0, 1.0), 1e-12).unwrap();
        assert!((m - 0.5).abs() < 1e-11);
        // density x on [0,1] has mean 2/3
        let m = mean_ratio(|x| x, |x| x, (0.0, 1.0), 1e-12).unwrap();
        assert!((m - 2.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn mean_ratio_sinusoidal_density() {
        // density x·sin²(πx) on [0,1]: mean (2/3)(1 − 3/(2π²))
        let expect = (2.0 / 3.0) * (1.0 - 3.0 / (2.0 * PI * PI));
        let m = mean_ratio(
            |x| x,
            |x: f64| x * (PI * x).sin().powi(2),
            (0.0, 1.0),
            1e-12,
        )
        .unwrap();
        assert!((m - expect).abs() < 1e-10);
        assert!((m - 0.5653455).abs() < 1e-7);
    }

    #[test]
    fn mean_ratio_degenerate_density() {
        assert!(matches!(
            mean_ratio(|x| x, |_| 0.0, (0.0, 1.0), 1e-10),
            Err(Error::DegenerateDensity)
        ));
    }

    #[test]
    fn additivity_over_split_point() {
        let f = |x: f64| (3.0 * x).sin() * (-x).exp() + x * x;
        let whole = run(IntegrationRequest::new(f, 0.0, 2.0).tolerance(1e-12));
        let left = run(IntegrationRequest::new(f, 0.0, 0.73).tolerance(1e-12));
        let right = run(IntegrationRequest::new(f, 0.73, 2.0).tolerance(1e-12));
        assert!((whole - left - right).abs() < 2e-12);
    }
}
