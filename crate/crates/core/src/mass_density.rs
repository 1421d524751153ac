//! Linear mass densities λ(x) of the rigid bodies being replaced by
//! mutually exclusive particles.
//!
//! The amplitude A is carried for reporting only: every probability built
//! from a density divides it out, so all moment computations use the
//! amplitude-free shape. That makes moments exactly invariant under
//! λ → c·λ, which is the defining property of a mutually exclusive system
//! (only mass ratios matter).

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use core::fmt;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, IntegrationRequest};

/// Shape of the density; the amplitude lives on [`MassDensity`].
#[derive(Clone)]
pub enum DensityKind {
    /// λ = A.
    Uniform,
    /// λ = A·xʳ with r ≥ 0 on a domain within [0, ∞).
    PowerLaw { exponent: f64 },
    /// λ = A/√(s² − x²) on a domain within [−s, s].
    InverseSqrtArc { scale: f64 },
    /// User-supplied shape with explicit endpoint-singularity flags.
    Custom {
        shape: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
        singular_at_lower: bool,
        singular_at_upper: bool,
    },
}

impl fmt::Debug for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityKind::Uniform => write!(f, "Uniform"),
            DensityKind::PowerLaw { exponent } => {
                f.debug_struct("PowerLaw").field("exponent", exponent).finish()
            }
            DensityKind::InverseSqrtArc { scale } => {
                f.debug_struct("InverseSqrtArc").field("scale", scale).finish()
            }
            DensityKind::Custom {
                singular_at_lower,
                singular_at_upper,
                ..
            } => f
                .debug_struct("Custom")
                .field("singular_at_lower", singular_at_lower)
                .field("singular_at_upper", singular_at_upper)
                .finish_non_exhaustive(),
        }
    }
}

/// A linear mass density with its domain.
#[derive(Debug, Clone)]
pub struct MassDensity {
    kind: DensityKind,
    amplitude: f64,
    domain: (f64, f64),
}

impl MassDensity {
    /// Uniform density λ = A on `domain`.
    pub fn uniform(amplitude: f64, domain: (f64, f64)) -> Result<Self> {
        Self::build(DensityKind::Uniform, amplitude, domain)
    }

    /// Power-law density λ = A·xʳ; requires r ≥ 0 and a domain in [0, ∞).
    pub fn power_law(exponent: f64, amplitude: f64, domain: (f64, f64)) -> Result<Self> {
        if !(exponent >= 0.0) {
            return Err(Error::InvalidArgument("power-law exponent must be ≥ 0"));
        }
        if domain.0 < 0.0 {
            return Err(Error::InvalidArgument(
                "power-law densities live on the nonnegative axis",
            ));
        }
        Self::build(DensityKind::PowerLaw { exponent }, amplitude, domain)
    }

    /// Inverse-square-root arc λ = A/√(s²−x²); the domain must stay within
    /// the closure [−s, s].
    pub fn inverse_sqrt_arc(scale: f64, amplitude: f64, domain: (f64, f64)) -> Result<Self> {
        if !(scale > 0.0) {
            return Err(Error::InvalidArgument("arc scale must be positive"));
        }
        if domain.0 < -scale || domain.1 > scale {
            return Err(Error::InvalidArgument(
                "arc domain must stay inside [−s, s]",
            ));
        }
        Self::build(DensityKind::InverseSqrtArc { scale }, amplitude, domain)
    }

    /// Analytic density supplied as a shape function (interpreted as λ/A)
    /// with explicit endpoint-singularity flags. No symbolic analysis is
    /// attempted on it.
    pub fn custom(
        shape: impl Fn(f64) -> f64 + Send + Sync + 'static,
        amplitude: f64,
        domain: (f64, f64),
        singular_at_lower: bool,
        singular_at_upper: bool,
    ) -> Result<Self> {
        Self::build(
            DensityKind::Custom {
                shape: Arc::new(shape),
                singular_at_lower,
                singular_at_upper,
            },
            amplitude,
            domain,
        )
    }

    fn build(kind: DensityKind, amplitude: f64, domain: (f64, f64)) -> Result<Self> {
        if !(amplitude > 0.0) || !amplitude.is_finite() {
            return Err(Error::InvalidArgument("amplitude must be positive"));
        }
        if !(domain.0 < domain.1) || !domain.0.is_finite() || !domain.1.is_finite() {
            return Err(Error::BadInterval {
                lo: domain.0,
                hi: domain.1,
            });
        }
        Ok(Self {
            kind,
            amplitude,
            domain,
        })
    }

    pub fn kind(&self) -> &DensityKind {
        &self.kind
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// λ(x) including the amplitude. Errors outside the domain.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.domain;
        if x < lo || x > hi {
            return Err(Error::OutsideDomain { x, lo, hi });
        }
        Ok(self.amplitude * self.shape(x))
    }

    /// Amplitude-free shape λ(x)/A, assumed inside the domain. This is the
    /// quantity every probability computation consumes.
    pub fn shape(&self, x: f64) -> f64 {
        match &self.kind {
            DensityKind::Uniform => 1.0,
            DensityKind::PowerLaw { exponent } => {
                if *exponent == 0.0 {
                    1.0
                } else {
                    x.powf(*exponent)
                }
            }
            DensityKind::InverseSqrtArc { scale } => {
                let d = scale * scale - x * x;
                if d <= 0.0 {
                    f64::INFINITY
                } else {
                    1.0 / d.sqrt()
                }
            }
            DensityKind::Custom { shape, .. } => shape(x),
        }
    }

    /// Whether λ itself blows up at the lower domain endpoint.
    pub fn singular_at_lower(&self) -> bool {
        match &self.kind {
            DensityKind::InverseSqrtArc { scale } => self.domain.0 <= -scale,
            DensityKind::Custom {
                singular_at_lower, ..
            } => *singular_at_lower,
            _ => false,
        }
    }

    /// Whether λ itself blows up at the upper domain endpoint.
    pub fn singular_at_upper(&self) -> bool {
        match &self.kind {
            DensityKind::InverseSqrtArc { scale } => self.domain.1 >= *scale,
            DensityKind::Custom {
                singular_at_upper, ..
            } => *singular_at_upper,
            _ => false,
        }
    }

    /// Continuum moment ∫xᵏλ / ∫λ by quadrature, with λ's endpoint
    /// singularities declared to the integrator.
    pub fn continuum_moment(&self, k: u32) -> Result<f64> {
        let base = self.integral_of_weighted(|_| 1.0)?;
        if !base.is_finite() {
            return Err(Error::DivergentMoment);
        }
        if !(base > 0.0) {
            return Err(Error::DegenerateDensity);
        }
        let num = self.integral_of_weighted(|x| x.powi(k as i32))?;
        if !num.is_finite() {
            return Err(Error::DivergentMoment);
        }
        Ok(num / base)
    }

    fn integral_of_weighted(&self, weight: impl Fn(f64) -> f64) -> Result<f64> {
        let (lo, hi) = self.domain;
        let mut req = IntegrationRequest::new(|x: f64| weight(x) * self.shape(x), lo, hi)
            .tolerance(1e-12);
        if self.singular_at_lower() {
            req = req.singular_at_lower();
        }
        if self.singular_at_upper() {
            req = req.singular_at_upper();
        }
        Ok(integrate(req)?.value)
    }
}

/// Moments ∫xᵏλ/∫λ for a set of orders, keyed by order.
#[derive(Debug, Clone)]
pub struct ContinuumMoments {
    values: BTreeMap<u32, f64>,
}

impl ContinuumMoments {
    pub fn compute(density: &MassDensity, orders: &[u32]) -> Result<Self> {
        let mut values = BTreeMap::new();
        values.insert(0, 1.0);
        for &k in orders {
            values.insert(k, density.continuum_moment(k)?);
        }
        Ok(Self { values })
    }

    pub fn get(&self, order: u32) -> Option<f64> {
        self.values.get(&order).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointwise_values() {
        let u = MassDensity::uniform(3.0, (0.0, 1.0)).unwrap();
        assert_eq!(u.eval(0.5).unwrap(), 3.0);
        let p = MassDensity::power_law(2.0, 1.0, (0.0, 1.0)).unwrap();
        assert_eq!(p.eval(0.5).unwrap(), 0.25);
        let a = MassDensity::inverse_sqrt_arc(1.0, 1.0, (-0.999, 0.999)).unwrap();
        assert_eq!(a.eval(0.0).unwrap(), 1.0);
        assert!(matches!(u.eval(2.0), Err(Error::OutsideDomain { .. })));
    }

    #[test]
    fn construction_guards() {
        assert!(MassDensity::uniform(0.0, (0.0, 1.0)).is_err());
        assert!(MassDensity::uniform(1.0, (1.0, 0.0)).is_err());
        assert!(MassDensity::power_law(-1.0, 1.0, (0.0, 1.0)).is_err());
        assert!(MassDensity::power_law(1.0, 1.0, (-0.5, 1.0)).is_err());
        assert!(MassDensity::inverse_sqrt_arc(1.0, 1.0, (-1.5, 0.5)).is_err());
    }

    #[test]
    fn uniform_and_power_law_first_moments() {
        let u = MassDensity::uniform(1.0, (0.0, 1.0)).unwrap();
        assert!((u.continuum_moment(1).unwrap() - 0.5).abs() < 1e-11);
        let lin = MassDensity::power_law(1.0, 1.0, (0.0, 1.0)).unwrap();
        assert!((lin.continuum_moment(1).unwrap() - 2.0 / 3.0).abs() < 1e-11);
        let par = MassDensity::power_law(2.0, 1.0, (0.0, 1.0)).unwrap();
        assert!((par.continuum_moment(1).unwrap() - 3.0 / 4.0).abs() < 1e-11);
    }

    #[test]
    fn power_law_matches_closed_form() {
        // (r+1)/(r+2)·l for k = 1 on [0, l]
        for &(r, l) in &[(0.0, 1.0), (1.0, 2.5), (2.0, 0.7), (3.5, 1.3)] {
            let d = MassDensity::power_law(r, 1.0, (0.0, l)).unwrap();
            let expect = (r + 1.0) / (r + 2.0) * l;
            assert!(
                (d.continuum_moment(1).unwrap() - expect).abs() < 1e-10,
                "r={r} l={l}"
            );
        }
    }

    #[test]
    fn amplitude_cancels_exactly() {
        for &amp in &[0.25, 1.0, 3.0, 1234.5] {
            let a = MassDensity::power_law(1.5, amp, (0.0, 2.0)).unwrap();
            let b = MassDensity::power_law(1.5, 1.0, (0.0, 2.0)).unwrap();
            // bit-identical, not merely close
            assert_eq!(
                a.continuum_moment(2).unwrap().to_bits(),
                b.continuum_moment(2).unwrap().to_bits()
            );
        }
    }

    #[test]
    fn domain_scaling_of_moments() {
        let unit = MassDensity::power_law(1.0, 1.0, (0.0, 1.0)).unwrap();
        let scaled = MassDensity::power_law(1.0, 1.0, (0.0, 3.0)).unwrap();
        for k in 1..=3u32 {
            let ratio = scaled.continuum_moment(k).unwrap() / unit.continuum_moment(k).unwrap();
            assert!((ratio - 3.0f64.powi(k as i32)).abs() < 1e-8);
        }
    }

    #[test]
    fn arc_moment_with_singular_endpoints() {
        // full arc on (−s, s): even symmetry gives first moment 0 and
        // second moment s²/2
        let d = MassDensity::inverse_sqrt_arc(1.0, 1.0, (-1.0, 1.0)).unwrap();
        assert!(d.singular_at_lower() && d.singular_at_upper());
        assert!(d.continuum_moment(1).unwrap().abs() < 1e-10);
        assert!((d.continuum_moment(2).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn custom_density_shape() {
        let d = MassDensity::custom(|x: f64| (-x).exp(), 2.0, (0.0, 1.0), false, false).unwrap();
        assert!((d.eval(0.5).unwrap() - 2.0 * (-0.5f64).exp()).abs() < 1e-14);
        // mean of e^{−x} on [0,1]: (1 − 2/e)/(1 − 1/e)
        let expect = (1.0 - 2.0 / core::f64::consts::E) / (1.0 - 1.0 / core::f64::consts::E);
        assert!((d.continuum_moment(1).unwrap() - expect).abs() < 1e-10);
    }

    #[test]
    fn moments_table() {
        let d = MassDensity::uniform(1.0, (0.0, 1.0)).unwrap();
        let m = ContinuumMoments::compute(&d, &[1, 2]).unwrap();
        assert_eq!(m.get(0), Some(1.0));
        assert!((m.get(1).unwrap() - 0.5).abs() < 1e-10);
        assert!((m.get(2).unwrap() - 1.0 / 3.0).abs() < 1e-10);
    }
}
