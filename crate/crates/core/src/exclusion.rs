//! The exclusion-density construction and the discrete systems it models.
//!
//! The central object is p(x; n) = C·λ(x)·|ψₙ(x)|²/p_cl(x): a mass density
//! sliced by the lobes of a bound state. Dividing by the classical density
//! flattens the envelope of |ψₙ|², so for singular-turning-point potentials
//! the quotient enters through the regularizing factor (l²−x²)^{1/2}
//! (harmonic) or (l−|x|)^{1/2} (bouncer), never through a pole.
//!
//! A candidate is accepted only when four conditions all hold: it is
//! normalizable, nonnegative, confined to the mass density's domain, and
//! vanishes in the limit at both domain endpoints. The endpoint condition
//! is a limit, so the check follows a shrinking sequence of offsets rather
//! than a single fixed probe: densities that vanish like √(distance) pass,
//! while a genuine plateau (a state that does not vanish where λ does not,
//! or a λ ∝ 1/p_cl cancellation) fails with the condition named.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::mass_density::MassDensity;
use crate::potentials::{Eigenstate, PotentialKind};
use crate::quadrature::{integrate, IntegrationRequest};

/// The four admissibility conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    Normalizable,
    Nonnegative,
    DomainContainment,
    EndpointVanishing,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Condition::Normalizable => "normalizability",
            Condition::Nonnegative => "positivity",
            Condition::DomainContainment => "domain containment",
            Condition::EndpointVanishing => "endpoint vanishing",
        };
        write!(f, "{name}")
    }
}

/// A failed condition together with the abscissa (or integral value, for
/// normalizability) that witnessed the failure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub condition: Condition,
    pub witness: f64,
}

/// Outcome of the four-condition admissibility check.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport {
    pub normalizable: bool,
    pub nonnegative: bool,
    pub domain_ok: bool,
    pub endpoints_vanish: bool,
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    pub fn accepted(&self) -> bool {
        self.normalizable && self.nonnegative && self.domain_ok && self.endpoints_vanish
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.accepted() {
            return write!(f, "all admissibility conditions hold");
        }
        write!(f, "violated")?;
        for (i, v) in self.violations.iter().enumerate() {
            let sep = if i == 0 { ": " } else { "; " };
            write!(f, "{sep}{} (witness {})", v.condition, v.witness)?;
        }
        Ok(())
    }
}

/// Tunable parameters of the numeric admissibility check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissibilityCheck {
    /// Positivity sample count (the builder adds 64 per quantum number).
    pub samples: usize,
    /// First endpoint probe at `fraction · domain width` from the edge.
    pub endpoint_step_fraction: f64,
    /// Endpoint values must fall below this fraction of the density maximum.
    pub endpoint_threshold: f64,
    /// Quadrature tolerance for the normalizability integral.
    pub tolerance: f64,
}

impl Default for AdmissibilityCheck {
    fn default() -> Self {
        Self {
            samples: 4096,
            endpoint_step_fraction: 1e-6,
            endpoint_threshold: 1e-4,
            tolerance: 1e-10,
        }
    }
}

/// Checks an arbitrary candidate density against the four conditions.
/// Never errors: the report encodes every failure.
pub fn admissibility(
    density: &MassDensity,
    candidate: impl Fn(f64) -> f64,
    domain: (f64, f64),
    check: &AdmissibilityCheck,
) -> AdmissibilityReport {
    let (dlo, dhi) = density.domain();
    let slack = 1e-12 * (dhi - dlo).abs().max(1.0);
    let singular = (
        density.singular_at_lower() && (domain.0 - dlo).abs() <= slack,
        density.singular_at_upper() && (domain.1 - dhi).abs() <= slack,
    );
    let mut report = check_candidate(&candidate, domain, singular, check);
    if domain.0 < dlo - slack || domain.1 > dhi + slack {
        report.domain_ok = false;
        let witness = if domain.0 < dlo - slack {
            domain.0
        } else {
            domain.1
        };
        report.violations.push(Violation {
            condition: Condition::DomainContainment,
            witness,
        });
    }
    report
}

/// Shared numeric core: positivity grid, normalizability quadrature, and
/// the endpoint limit probes. Returns the report plus the integral when it
/// was computable.
fn check_candidate(
    candidate: &(impl Fn(f64) -> f64 + ?Sized),
    domain: (f64, f64),
    singular: (bool, bool),
    check: &AdmissibilityCheck,
) -> AdmissibilityReport {
    let (lo, hi) = domain;
    let width = hi - lo;
    let mut report = AdmissibilityReport {
        normalizable: true,
        nonnegative: true,
        domain_ok: true,
        endpoints_vanish: true,
        violations: Vec::new(),
    };

    // positivity on a midpoint grid; also records the scale for the
    // endpoint threshold
    let n = check.samples.max(16);
    let step = width / n as f64;
    let mut max_abs = 0.0f64;
    let mut worst = (0.0f64, lo);
    for i in 0..n {
        let x = lo + (i as f64 + 0.5) * step;
        let v = candidate(x);
        if v.is_finite() {
            max_abs = max_abs.max(v.abs());
        }
        if v < worst.0 {
            worst = (v, x);
        }
    }
    if worst.0 < -1e-12 * max_abs.max(1e-300) {
        report.nonnegative = false;
        report.violations.push(Violation {
            condition: Condition::Nonnegative,
            witness: worst.1,
        });
    }

    // normalizability by quadrature
    let mut req = IntegrationRequest::new(|x: f64| candidate(x), lo, hi)
        .tolerance(check.tolerance)
        .nodes_hint((n / 64) as u32);
    if singular.0 {
        req = req.singular_at_lower();
    }
    if singular.1 {
        req = req.singular_at_upper();
    }
    match integrate(req) {
        Ok(res) if res.value.is_finite() && res.value > 10.0 * check.tolerance => {}
        Ok(res) => {
            report.normalizable = false;
            report.violations.push(Violation {
                condition: Condition::Normalizable,
                witness: res.value,
            });
        }
        Err(_) => {
            report.normalizable = false;
            report.violations.push(Violation {
                condition: Condition::Normalizable,
                witness: f64::NAN,
            });
        }
    }

    // endpoint limits along a shrinking offset sequence
    for (endpoint, inward) in [(lo, 1.0), (hi, -1.0)] {
        if !endpoint_vanishes(candidate, endpoint, inward, width, max_abs, check) {
            report.endpoints_vanish = false;
            report.violations.push(Violation {
                condition: Condition::EndpointVanishing,
                witness: endpoint,
            });
        }
    }
    report
}

fn endpoint_vanishes(
    candidate: &(impl Fn(f64) -> f64 + ?Sized),
    endpoint: f64,
    inward: f64,
    width: f64,
    max_abs: f64,
    check: &AdmissibilityCheck,
) -> bool {
    let threshold = check.endpoint_threshold * max_abs.max(1e-300);
    let mut eps = check.endpoint_step_fraction * width;
    let mut prev = candidate(endpoint + inward * eps).abs();
    if prev <= threshold {
        return true;
    }
    // a √(distance) approach to zero needs smaller offsets than the first
    // probe; a plateau never makes progress
    for _ in 0..6 {
        eps /= 10.0;
        let value = candidate(endpoint + inward * eps).abs();
        if value >= 0.9 * prev {
            return false;
        }
        if value <= threshold {
            return true;
        }
        prev = value;
    }
    false
}

/// A validated, normalized exclusion density p(x; n) together with its
/// particle partition.
#[derive(Debug, Clone)]
pub struct ExclusionDensity {
    mass_density: MassDensity,
    state: Eigenstate,
    normalization: f64,
    partition: Vec<(f64, f64)>,
}

impl ExclusionDensity {
    /// Builds p = C·λ·|ψ|²/p_cl over λ's domain, runs the full
    /// admissibility check, and partitions the domain at the interior
    /// eigenfunction zeros.
    ///
    /// Rejections return [`Error::Inadmissible`] carrying the report.
    pub fn build(mass_density: MassDensity, state: Eigenstate) -> Result<Self> {
        let (dlo, dhi) = mass_density.domain();
        let (plo, phi) = state.potential().domain();
        let slack = 1e-12 * (phi - plo).max(1.0);
        if dlo < plo - slack || dhi > phi + slack {
            return Err(Error::InvalidArgument(
                "mass density domain must lie inside the classically allowed region",
            ));
        }

        let check = AdmissibilityCheck {
            samples: 4096 + 64 * state.quantum_number() as usize,
            ..AdmissibilityCheck::default()
        };
        let weight = |x: f64| composite_weight(&mass_density, &state, x);
        let singular = (
            mass_density.singular_at_lower(),
            mass_density.singular_at_upper(),
        );
        let report = check_candidate(&weight, (dlo, dhi), singular, &check);
        if !report.accepted() {
            return Err(Error::Inadmissible(report));
        }

        let mut req = IntegrationRequest::new(&weight, dlo, dhi)
            .tolerance(1e-12)
            .nodes_hint(state.node_count() + 1);
        if singular.0 {
            req = req.singular_at_lower();
        }
        if singular.1 {
            req = req.singular_at_upper();
        }
        let total = integrate(req)?;
        if !(total.value > 0.0) {
            return Err(Error::DegenerateDensity);
        }

        let partition = find_partition(&state, (dlo, dhi))?;
        Ok(Self {
            mass_density,
            state,
            normalization: 1.0 / total.value,
            partition,
        })
    }

    pub fn mass_density(&self) -> &MassDensity {
        &self.mass_density
    }

    pub fn state(&self) -> &Eigenstate {
        &self.state
    }

    /// The constant C that normalizes the amplitude-free weight.
    pub fn normalization(&self) -> f64 {
        self.normalization
    }

    pub fn domain(&self) -> (f64, f64) {
        self.mass_density.domain()
    }

    /// Particle intervals, ordered and disjoint.
    pub fn partition(&self) -> &[(f64, f64)] {
        &self.partition
    }

    pub fn particle_count(&self) -> usize {
        self.partition.len()
    }

    /// p(x; n); identically zero outside the mass density's domain.
    pub fn eval(&self, x: f64) -> f64 {
        let (lo, hi) = self.mass_density.domain();
        if x < lo || x > hi {
            return 0.0;
        }
        self.normalization * composite_weight(&self.mass_density, &self.state, x)
    }

    /// Probability carried by the i-th particle interval.
    pub fn interval_probability(&self, index: usize) -> Result<f64> {
        let &(lo, hi) = self
            .partition
            .get(index)
            .ok_or(Error::InvalidArgument("partition index out of range"))?;
        let res = integrate(
            IntegrationRequest::new(|x: f64| self.eval(x), lo, hi)
                .tolerance(1e-12)
                .nodes_hint(2),
        )?;
        Ok(res.value)
    }

    pub(crate) fn weight(&self, x: f64) -> f64 {
        composite_weight(&self.mass_density, &self.state, x)
    }

    pub(crate) fn singular_flags(&self) -> (bool, bool) {
        (
            self.mass_density.singular_at_lower(),
            self.mass_density.singular_at_upper(),
        )
    }
}

/// Amplitude-free integrand λ/A · |ψ|² / p_cl with the classical density
/// folded in analytically: constants cancel into C, and the turning-point
/// divergence becomes the vanishing factor √(l²−x²) or √(l−|x|).
fn composite_weight(density: &MassDensity, state: &Eigenstate, x: f64) -> f64 {
    let psi = match state.eval(x) {
        Ok(v) => v,
        Err(_) => return 0.0,
    };
    let l = state.potential().half_width();
    let regularizer = match state.potential().kind() {
        PotentialKind::InfiniteWell { .. } => 1.0,
        PotentialKind::Harmonic => (l * l - x * x).max(0.0).sqrt(),
        PotentialKind::LinearBouncer { .. } => (l - x.abs()).max(0.0).sqrt(),
    };
    density.shape(x) * psi * psi * regularizer
}

/// Signed candidate density built by weighting a state with its own
/// momentum operator, ψ·ψ′ (the imaginary prefactor dropped). It
/// oscillates around zero, so it always fails the positivity condition;
/// it exists to exercise the rejection path.
pub fn momentum_weight_candidate(state: &Eigenstate) -> impl Fn(f64) -> f64 + '_ {
    move |x: f64| {
        let psi = state.eval(x).unwrap_or(0.0);
        let dpsi = state.derivative(x).unwrap_or(0.0);
        psi * dpsi
    }
}

/// Locates the interior zeros of ψₙ inside `domain` by midpoint-grid sign
/// bracketing plus bisection, and returns the intervals between them.
pub fn find_partition(state: &Eigenstate, domain: (f64, f64)) -> Result<Vec<(f64, f64)>> {
    let (lo, hi) = domain;
    if !(lo < hi) {
        return Err(Error::BadInterval { lo, hi });
    }
    let width = hi - lo;
    let samples = 1024.max(64 * (state.node_count() as usize + 2));
    let step = width / samples as f64;
    let f = |x: f64| state.eval(x).unwrap_or(0.0);

    let mut zeros: Vec<f64> = Vec::new();
    let mut x_prev = lo + 0.5 * step;
    let mut f_prev = f(x_prev);
    for i in 1..samples {
        let x = lo + (i as f64 + 0.5) * step;
        let fx = f(x);
        if f_prev == 0.0 {
            zeros.push(x_prev);
        } else if f_prev * fx < 0.0 {
            zeros.push(bisect_zero(&f, x_prev, x, width)?);
        }
        x_prev = x;
        f_prev = fx;
    }

    let merge_tol = 1e-10 * width;
    zeros.dedup_by(|a, b| (*a - *b).abs() < merge_tol);

    let mut intervals = Vec::with_capacity(zeros.len() + 1);
    let mut left = lo;
    for &z in &zeros {
        intervals.push((left, z));
        left = z;
    }
    intervals.push((left, hi));
    Ok(intervals)
}

fn bisect_zero(
    f: &(impl Fn(f64) -> f64 + ?Sized),
    mut lo: f64,
    mut hi: f64,
    width: f64,
) -> Result<f64> {
    let mut flo = f(lo);
    if flo == 0.0 {
        return Ok(lo);
    }
    let tol = 1e-13 * width.max(1.0);
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol {
            return Ok(mid);
        }
        let fmid = f(mid);
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
    Err(Error::SolverFailed {
        what: "partition zero bisection",
        index: 0,
    })
}

/// |ψₙ|² renormalized on the half line [0, ∞) — the fallback density used
/// when a λ/p_cl cancellation breaks the endpoint conditions (an
/// inverse-square-root arc on the harmonic oscillator leaves a constant
/// weight, so the state itself carries the whole construction).
#[derive(Debug, Clone, Copy)]
pub struct HalfLineDensity {
    state: Eigenstate,
}

/// Builds the half-line density for a harmonic-oscillator state.
pub fn half_line_density(state: Eigenstate) -> Result<HalfLineDensity> {
    if !matches!(state.potential().kind(), PotentialKind::Harmonic) {
        return Err(Error::InvalidArgument(
            "the half-line density is a harmonic-oscillator construction",
        ));
    }
    Ok(HalfLineDensity { state })
}

impl HalfLineDensity {
    pub fn state(&self) -> &Eigenstate {
        &self.state
    }

    /// p_im(x; n) = 2|ψₙ(x)|² for x ≥ 0, zero on the negative axis (the
    /// full-line state is even in |ψ|², so halving the domain doubles the
    /// density).
    pub fn eval(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        let v = self.state.eval(x).unwrap_or(0.0);
        2.0 * v * v
    }
}

/// One mass-weighted component of a discrete two-body (or N-body) system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Component {
    /// Point mass pinned at a position.
    Delta { position: f64 },
    /// Constant-speed particle bouncing in a box.
    UniformBox { lo: f64, hi: f64 },
    /// Classical oscillator arc (arcsine law) of given center and amplitude.
    ArcOscillator { center: f64, amplitude: f64 },
    /// Quantum ground-state Gaussian with α = mω/ħ.
    GaussianGround { center: f64, alpha: f64 },
}

impl Component {
    fn validate(&self) -> Result<()> {
        match *self {
            Component::Delta { position } => {
                if !position.is_finite() {
                    return Err(Error::InvalidArgument("delta position must be finite"));
                }
            }
            Component::UniformBox { lo, hi } => {
                if !(lo < hi) {
                    return Err(Error::BadInterval { lo, hi });
                }
            }
            Component::ArcOscillator { amplitude, .. } => {
                if !(amplitude > 0.0) {
                    return Err(Error::InvalidArgument("arc amplitude must be positive"));
                }
            }
            Component::GaussianGround { alpha, .. } => {
                if !(alpha > 0.0) {
                    return Err(Error::InvalidArgument("gaussian alpha must be positive"));
                }
            }
        }
        Ok(())
    }

    /// Support interval; the Gaussian spans the whole line, which is what
    /// makes finite-potential quantum pairs non-exclusive.
    pub fn support(&self) -> (f64, f64) {
        match *self {
            Component::Delta { position } => (position, position),
            Component::UniformBox { lo, hi } => (lo, hi),
            Component::ArcOscillator { center, amplitude } => {
                (center - amplitude, center + amplitude)
            }
            Component::GaussianGround { .. } => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    /// Normalized component density at a point. The delta component has no
    /// pointwise value and reports zero away from its support point.
    pub fn density(&self, x: f64) -> f64 {
        match *self {
            Component::Delta { .. } => 0.0,
            Component::UniformBox { lo, hi } => {
                if x >= lo && x <= hi {
                    1.0 / (hi - lo)
                } else {
                    0.0
                }
            }
            Component::ArcOscillator { center, amplitude } => {
                let d = amplitude * amplitude - (x - center) * (x - center);
                if d > 0.0 {
                    1.0 / (core::f64::consts::PI * d.sqrt())
                } else {
                    0.0
                }
            }
            Component::GaussianGround { center, alpha } => {
                (alpha / core::f64::consts::PI).sqrt()
                    * (-alpha * (x - center) * (x - center)).exp()
            }
        }
    }

    /// ⟨xᵏ⟩ of the component in closed form.
    fn moment(&self, k: u32) -> f64 {
        match *self {
            Component::Delta { position } => position.powi(k as i32),
            Component::UniformBox { lo, hi } => {
                let kk = k as i32;
                (hi.powi(kk + 1) - lo.powi(kk + 1)) / ((k as f64 + 1.0) * (hi - lo))
            }
            Component::ArcOscillator { center, amplitude } => {
                // central moments of the arcsine law: μ_{2j} = a^{2j} C(2j,j)/4^j
                central_moment_sum(center, k, |j| {
                    amplitude.powi(2 * j as i32) * binomial_f64(2 * j, j)
                        / 4.0f64.powi(j as i32)
                })
            }
            Component::GaussianGround { center, alpha } => {
                // μ_{2j} = (2j−1)!! σ^{2j} with σ² = 1/(2α)
                let sigma2 = 1.0 / (2.0 * alpha);
                central_moment_sum(center, k, |j| double_factorial_odd(j) * sigma2.powi(j as i32))
            }
        }
    }
}

/// Σ_j C(k, 2j)·c^{k−2j}·μ_{2j} — binomial expansion of ⟨xᵏ⟩ about the
/// center for a symmetric component.
fn central_moment_sum(center: f64, k: u32, mu_even: impl Fn(u32) -> f64) -> f64 {
    let mut total = 0.0;
    for j in 0..=(k / 2) {
        total +=
            binomial_f64(k, 2 * j) * center.powi((k - 2 * j) as i32) * mu_even(j);
    }
    total
}

fn binomial_f64(n: u32, k: u32) -> f64 {
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 1..=k {
        acc = acc * (n - k + i) as f64 / i as f64;
    }
    acc
}

/// (2j−1)!! with the empty product equal to 1.
fn double_factorial_odd(j: u32) -> f64 {
    let mut acc = 1.0f64;
    let mut m = 1;
    for _ in 0..j {
        acc *= m as f64;
        m += 2;
    }
    acc
}

/// A finite list of mass-weighted component densities treated as one body:
/// the system density is the mixture Σ mᵢpᵢ / Σ mᵢ.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSystem {
    components: Vec<(f64, Component)>,
}

impl DiscreteSystem {
    pub fn new(components: Vec<(f64, Component)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument("a system needs components"));
        }
        for (mass, component) in &components {
            if !(*mass > 0.0) || !mass.is_finite() {
                return Err(Error::InvalidArgument("component masses must be positive"));
            }
            component.validate()?;
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[(f64, Component)] {
        &self.components
    }

    /// True iff component supports are pairwise disjoint (touching at a
    /// single point still counts as disjoint). Any Gaussian component makes
    /// a multi-component system non-exclusive, since its support is the
    /// whole line.
    pub fn exclusive(&self) -> bool {
        for i in 0..self.components.len() {
            for j in (i + 1)..self.components.len() {
                let (alo, ahi) = self.components[i].1.support();
                let (blo, bhi) = self.components[j].1.support();
                if alo < bhi && blo < ahi {
                    return false;
                }
            }
        }
        true
    }

    /// Mixture density at a point (delta components contribute nothing
    /// pointwise).
    pub fn density(&self, x: f64) -> f64 {
        let total_mass: f64 = self.components.iter().map(|(m, _)| m).sum();
        self.components
            .iter()
            .map(|(m, c)| m * c.density(x))
            .sum::<f64>()
            / total_mass
    }

    /// Mass-weighted mixture moment ⟨xᵏ⟩ = Σ mᵢ⟨xᵏ⟩ᵢ / Σ mᵢ from the
    /// component closed forms.
    pub fn moment(&self, k: u32) -> Result<f64> {
        let total_mass: f64 = self.components.iter().map(|(m, _)| m).sum();
        let mut acc = 0.0;
        for (mass, component) in &self.components {
            let m = component.moment(k);
            if !m.is_finite() {
                return Err(Error::DivergentMoment);
            }
            acc += mass * m;
        }
        Ok(acc / total_mass)
    }
}

/// ⟨x⟩ of the four two-body systems sharing the geometry of a left body on
/// [−outer_left, −inner] (mass m1) and a right body on [inner, outer_right]
/// (mass m2), plus the point-mass value they must all reproduce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterOfMassCheck {
    /// Constant-velocity boxes, by quadrature.
    pub boxes: f64,
    /// Ground-to-nth infinite-well pair (n = 1), by quadrature.
    pub wells: f64,
    /// Classical oscillator arcs, by singular-endpoint quadrature.
    pub arcs: f64,
    /// Ground-state Gaussian pair (α = 1 and 2), by semi-infinite quadrature.
    pub gaussians: f64,
    /// Point masses at the component centers, in closed form.
    pub point_mass: f64,
}

impl CenterOfMassCheck {
    pub fn values(&self) -> [f64; 5] {
        [
            self.boxes,
            self.wells,
            self.arcs,
            self.gaussians,
            self.point_mass,
        ]
    }

    /// Largest pairwise disagreement among the five values.
    pub fn max_deviation(&self) -> f64 {
        let v = self.values();
        let mut worst = 0.0f64;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                worst = worst.max((v[i] - v[j]).abs());
            }
        }
        worst
    }
}

/// Computes ⟨x⟩ for all four two-body configurations and the point-mass
/// closed form. Requires 0 < inner < outer_left and inner < outer_right.
pub fn center_of_mass_crosscheck(
    inner: f64,
    outer_left: f64,
    outer_right: f64,
    m1: f64,
    m2: f64,
) -> Result<CenterOfMassCheck> {
    if !(inner > 0.0 && inner < outer_left && inner < outer_right) {
        return Err(Error::InvalidArgument(
            "need 0 < inner < outer_left and inner < outer_right",
        ));
    }
    if !(m1 > 0.0 && m2 > 0.0) {
        return Err(Error::InvalidArgument("masses must be positive"));
    }
    let a = inner;
    let b = outer_left;
    let b_r = outer_right;
    let left = (-b, -a);
    let right = (a, b_r);
    let total = m1 + m2;
    let tol = 1e-12;

    let combine = |mean_left: f64, mean_right: f64| (m1 * mean_left + m2 * mean_right) / total;

    // (i) constant-velocity boxes
    let box_mean = |seg: (f64, f64)| -> Result<f64> {
        let w = seg.1 - seg.0;
        let res = integrate(
            IntegrationRequest::new(|x: f64| x / w, seg.0, seg.1).tolerance(tol),
        )?;
        Ok(res.value)
    };
    let boxes = combine(box_mean(left)?, box_mean(right)?);

    // (ii) infinite-well states over the same segments (the mean is the
    // segment center for every quantum number; n = 1 here)
    let well_mean = |seg: (f64, f64)| -> Result<f64> {
        let w = seg.1 - seg.0;
        let res = integrate(
            IntegrationRequest::new(
                |x: f64| {
                    let s = (core::f64::consts::PI * (x - seg.0) / w).sin();
                    x * 2.0 / w * s * s
                },
                seg.0,
                seg.1,
            )
            .tolerance(tol)
            .nodes_hint(2),
        )?;
        Ok(res.value)
    };
    let wells = combine(well_mean(left)?, well_mean(right)?);

    // (iii) classical oscillator arcs spanning the same segments
    let arc_mean = |seg: (f64, f64)| -> Result<f64> {
        let center = 0.5 * (seg.0 + seg.1);
        let amp = 0.5 * (seg.1 - seg.0);
        let res = integrate(
            IntegrationRequest::new(
                |x: f64| {
                    let d = amp * amp - (x - center) * (x - center);
                    x / (core::f64::consts::PI * d.sqrt())
                },
                seg.0,
                seg.1,
            )
            .tolerance(tol)
            .singular_at_lower()
            .singular_at_upper(),
        )?;
        Ok(res.value)
    };
    let arcs = combine(arc_mean(left)?, arc_mean(right)?);

    // (iv) ground-state Gaussians centered where the point masses sit;
    // integrated in the centered coordinate so the tail bound is about 0
    let gauss_mean = |center: f64, alpha: f64| -> Result<f64> {
        let g = move |u: f64| (alpha / core::f64::consts::PI).sqrt() * (-alpha * u * u).exp();
        let halves = |weight: fn(f64) -> f64, degree: f64| -> Result<f64> {
            let pos = integrate(
                IntegrationRequest::new(|u: f64| weight(u) * g(u), 0.0, f64::INFINITY)
                    .tolerance(tol)
                    .gaussian_tail(alpha, degree),
            )?;
            let neg = integrate(
                IntegrationRequest::new(|u: f64| weight(u) * g(u), f64::NEG_INFINITY, 0.0)
                    .tolerance(tol)
                    .gaussian_tail(alpha, degree),
            )?;
            Ok(pos.value + neg.value)
        };
        let mass = halves(|_| 1.0, 0.0)?;
        let drift = halves(|u| u, 1.0)?;
        Ok(center + drift / mass)
    };
    let x1 = -(a + b) / 2.0;
    let x2 = (a + b_r) / 2.0;
    let gaussians = combine(gauss_mean(x1, 1.0)?, gauss_mean(x2, 2.0)?);

    // point masses at the segment centers
    let point_mass = ((m2 - m1) * a / 2.0 + m2 * b_r / 2.0 - m1 * b / 2.0) / total;

    Ok(CenterOfMassCheck {
        boxes,
        wells,
        arcs,
        gaussians,
        point_mass,
    })
}
