//! The three bound reference potentials, their eigenfunctions and their
//! classical position densities, all in a turning-point parametrization.
//!
//! Everything is expressed through the single length scale `l` (the
//! classical turning point / wall position), which removes ħ, m, ω and the
//! force constant from every formula:
//!
//! * infinite well — uniform classical density; sinusoidal eigenfunctions;
//!   a symmetric `[−l, l]` variant and a half variant on `[0, l]`;
//! * harmonic oscillator — arcsine classical density 1/(π√(l²−x²));
//!   eigenfunctions use the weight-normalized Hermite recurrence with
//!   argument √(2n+1)·x/l so the turning point sits at `l` for every n;
//! * linear bouncer U = F|x| — classical density ∝ (l−|x|)^{−1/2};
//!   eigenfunctions are Ai(y·(|x|−l)/l) reflected by parity, where y is a
//!   zero of Ai (odd states, ψ(0) = 0) or of Ai′ (even states, ψ′(0) = 0),
//!   and the normalization constant is fixed by quadrature.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, IntegrationRequest};
use crate::specfun::{
    airy_ai, airy_ai_prime, airy_zeros, hermite_weighted, hermite_weighted_derivative,
    AiryZeroKind,
};

/// Domain variant of the infinite well.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WellVariant {
    /// Walls at ±l.
    Symmetric,
    /// Walls at 0 and l.
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialKind {
    InfiniteWell { variant: WellVariant },
    Harmonic,
    LinearBouncer { force: f64 },
}

/// A bound potential with its turning point / wall position `l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    kind: PotentialKind,
    half_width: f64,
}

impl PotentialSpec {
    /// Infinite well with walls at ±l.
    pub fn symmetric_well(l: f64) -> Result<Self> {
        Self::build(
            PotentialKind::InfiniteWell {
                variant: WellVariant::Symmetric,
            },
            l,
        )
    }

    /// Infinite well with walls at 0 and l.
    pub fn half_well(l: f64) -> Result<Self> {
        Self::build(
            PotentialKind::InfiniteWell {
                variant: WellVariant::Half,
            },
            l,
        )
    }

    /// Harmonic oscillator whose classical turning point is pinned to ±l
    /// for every quantum number.
    pub fn harmonic(l: f64) -> Result<Self> {
        Self::build(PotentialKind::Harmonic, l)
    }

    /// Symmetric linear potential F|x| with classical amplitude l.
    pub fn linear_bouncer(l: f64, force: f64) -> Result<Self> {
        if !(force > 0.0) {
            return Err(Error::InvalidArgument("force must be positive"));
        }
        Self::build(PotentialKind::LinearBouncer { force }, l)
    }

    fn build(kind: PotentialKind, l: f64) -> Result<Self> {
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::InvalidArgument("half width must be positive"));
        }
        Ok(Self {
            kind,
            half_width: l,
        })
    }

    pub fn kind(&self) -> PotentialKind {
        self.kind
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    /// Classically allowed region (the well interior for the wells).
    pub fn domain(&self) -> (f64, f64) {
        let l = self.half_width;
        match self.kind {
            PotentialKind::InfiniteWell {
                variant: WellVariant::Half,
            } => (0.0, l),
            _ => (-l, l),
        }
    }

    /// Whether the classical density diverges at the given domain edge.
    pub fn singular_turning_points(&self) -> bool {
        !matches!(self.kind, PotentialKind::InfiniteWell { .. })
    }

    /// Normalized classical position density at `x`.
    ///
    /// Errors with [`Error::Singularity`] at or beyond a divergent turning
    /// point and [`Error::OutsideDomain`] outside a well.
    pub fn classical_density(&self, x: f64) -> Result<f64> {
        let l = self.half_width;
        let (lo, hi) = self.domain();
        match self.kind {
            PotentialKind::InfiniteWell { .. } => {
                if x < lo || x > hi {
                    return Err(Error::OutsideDomain { x, lo, hi });
                }
                Ok(1.0 / (hi - lo))
            }
            PotentialKind::Harmonic => {
                if x.abs() >= l {
                    return Err(Error::Singularity { x });
                }
                Ok(1.0 / (core::f64::consts::PI * (l * l - x * x).sqrt()))
            }
            PotentialKind::LinearBouncer { .. } => {
                if x.abs() >= l {
                    return Err(Error::Singularity { x });
                }
                Ok(1.0 / (4.0 * l.sqrt() * (l - x.abs()).sqrt()))
            }
        }
    }
}

/// Spatial parity of an eigenstate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct BouncerData {
    /// Magnitude of the Airy (or Airy-derivative) zero selecting the state.
    zero: f64,
    /// Normalization constant fixed by quadrature over [−l, l].
    norm: f64,
}

/// A normalized bound state of one of the three potentials.
///
/// Immutable after construction; the bouncer variant resolves its Airy zero
/// and normalization constant eagerly so evaluation stays allocation-free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenstate {
    potential: PotentialSpec,
    n: u32,
    parity: Parity,
    bouncer: Option<BouncerData>,
}

impl Eigenstate {
    /// State of a well (n ≥ 1) or harmonic oscillator (n ≥ 0). Parity
    /// follows from n; bouncer states need [`Eigenstate::bouncer`].
    pub fn new(potential: PotentialSpec, n: u32) -> Result<Self> {
        let parity = match potential.kind {
            PotentialKind::InfiniteWell { variant } => {
                if n < 1 {
                    return Err(Error::InvalidArgument("well states start at n = 1"));
                }
                match variant {
                    // cos for odd n, sin for even n
                    WellVariant::Symmetric => {
                        if n % 2 == 1 {
                            Parity::Even
                        } else {
                            Parity::Odd
                        }
                    }
                    WellVariant::Half => Parity::None,
                }
            }
            PotentialKind::Harmonic => {
                if n % 2 == 0 {
                    Parity::Even
                } else {
                    Parity::Odd
                }
            }
            PotentialKind::LinearBouncer { .. } => {
                return Err(Error::InvalidArgument(
                    "bouncer states need an explicit parity; use Eigenstate::bouncer",
                ))
            }
        };
        Ok(Self {
            potential,
            n,
            parity,
            bouncer: None,
        })
    }

    /// k-th bouncer state of the given parity (k ≥ 1). Odd states are built
    /// from the k-th zero of Ai, even states from the k-th zero of Ai′.
    pub fn bouncer(potential: PotentialSpec, k: u32, parity: Parity) -> Result<Self> {
        if !matches!(potential.kind, PotentialKind::LinearBouncer { .. }) {
            return Err(Error::InvalidArgument(
                "parity-indexed construction is for the linear bouncer",
            ));
        }
        if k < 1 {
            return Err(Error::InvalidArgument("bouncer states start at k = 1"));
        }
        let zero_kind = match parity {
            Parity::Odd => AiryZeroKind::Ai,
            Parity::Even => AiryZeroKind::AiDerivative,
            Parity::None => {
                return Err(Error::InvalidArgument("bouncer states are even or odd"))
            }
        };
        let zero = airy_zeros(zero_kind, k)?.zeros()[k as usize - 1];
        let l = potential.half_width;
        // ∫ψ² over [−l, l] = 2·N²·∫₀^l Ai(y(x−l)/l)² dx
        let half = integrate(
            IntegrationRequest::new(
                |x: f64| {
                    let a = airy_ai(zero * (x - l) / l);
                    a * a
                },
                0.0,
                l,
            )
            .tolerance(1e-13)
            .nodes_hint(k + 1),
        )?;
        if !(half.value > 0.0) {
            return Err(Error::DegenerateDensity);
        }
        let norm = 1.0 / (2.0 * half.value).sqrt();
        Ok(Self {
            potential,
            n: k,
            parity,
            bouncer: Some(BouncerData { zero, norm }),
        })
    }

    pub fn potential(&self) -> &PotentialSpec {
        &self.potential
    }

    pub fn quantum_number(&self) -> u32 {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Count of interior eigenfunction zeros over the potential's domain.
    pub fn node_count(&self) -> u32 {
        match self.potential.kind {
            PotentialKind::InfiniteWell { .. } => self.n - 1,
            PotentialKind::Harmonic => self.n,
            PotentialKind::LinearBouncer { .. } => match self.parity {
                Parity::Odd => 2 * self.n - 1,
                _ => 2 * (self.n - 1),
            },
        }
    }

    /// Normalized eigenfunction ψₙ(x).
    ///
    /// Defined on all of ℝ for the harmonic oscillator and on the well /
    /// bouncer domain otherwise ([`Error::OutsideDomain`] beyond it).
    pub fn eval(&self, x: f64) -> Result<f64> {
        let l = self.potential.half_width;
        match self.potential.kind {
            PotentialKind::InfiniteWell { variant } => {
                let (lo, hi) = self.potential.domain();
                if x < lo || x > hi {
                    return Err(Error::OutsideDomain { x, lo, hi });
                }
                let nf = self.n as f64;
                Ok(match variant {
                    WellVariant::Symmetric => {
                        let arg = nf * core::f64::consts::PI * x / (2.0 * l);
                        let osc = if self.n % 2 == 1 { arg.cos() } else { arg.sin() };
                        osc / l.sqrt()
                    }
                    WellVariant::Half => {
                        (2.0 / l).sqrt() * (nf * core::f64::consts::PI * x / l).sin()
                    }
                })
            }
            PotentialKind::Harmonic => {
                let scale = (2.0 * self.n as f64 + 1.0).sqrt() / l;
                Ok(scale.sqrt() * hermite_weighted(self.n, scale * x))
            }
            PotentialKind::LinearBouncer { .. } => {
                if x.abs() > l {
                    return Err(Error::OutsideDomain { x, lo: -l, hi: l });
                }
                let data = self.bouncer.expect("bouncer states carry zero data");
                let body = data.norm * airy_ai(data.zero * (x.abs() - l) / l);
                Ok(match self.parity {
                    Parity::Odd if x < 0.0 => -body,
                    _ => body,
                })
            }
        }
    }

    /// dψₙ/dx, used by the signed operator-weight diagnostics.
    pub fn derivative(&self, x: f64) -> Result<f64> {
        let l = self.potential.half_width;
        match self.potential.kind {
            PotentialKind::InfiniteWell { variant } => {
                let (lo, hi) = self.potential.domain();
                if x < lo || x > hi {
                    return Err(Error::OutsideDomain { x, lo, hi });
                }
                let nf = self.n as f64;
                Ok(match variant {
                    WellVariant::Symmetric => {
                        let freq = nf * core::f64::consts::PI / (2.0 * l);
                        let arg = freq * x;
                        let osc = if self.n % 2 == 1 {
                            -arg.sin()
                        } else {
                            arg.cos()
                        };
                        freq * osc / l.sqrt()
                    }
                    WellVariant::Half => {
                        let freq = nf * core::f64::consts::PI / l;
                        (2.0 / l).sqrt() * freq * (freq * x).cos()
                    }
                })
            }
            PotentialKind::Harmonic => {
                let scale = (2.0 * self.n as f64 + 1.0).sqrt() / l;
                Ok(scale.sqrt() * scale * hermite_weighted_derivative(self.n, scale * x))
            }
            PotentialKind::LinearBouncer { .. } => {
                if x.abs() > l {
                    return Err(Error::OutsideDomain { x, lo: -l, hi: l });
                }
                let data = self.bouncer.expect("bouncer states carry zero data");
                let slope = data.norm * data.zero / l * airy_ai_prime(data.zero * (x.abs() - l) / l);
                // chain rule through |x|; both parities give an even or odd
                // derivative as appropriate
                Ok(match self.parity {
                    Parity::Odd => slope,
                    _ if x < 0.0 => -slope,
                    _ => slope,
                })
            }
        }
    }

    /// Dimensionless energy scale of the state: n²π² for the wells, 2n+1
    /// for the harmonic oscillator (the exponent scale of the Gaussian
    /// factor), and the Airy-zero magnitude y for the bouncer (energy in
    /// units of ρF, with l = yρ).
    pub fn energy(&self) -> f64 {
        match self.potential.kind {
            PotentialKind::InfiniteWell { .. } => {
                let nf = self.n as f64;
                nf * nf * core::f64::consts::PI * core::f64::consts::PI
            }
            PotentialKind::Harmonic => 2.0 * self.n as f64 + 1.0,
            PotentialKind::LinearBouncer { .. } => {
                self.bouncer.expect("bouncer states carry zero data").zero
            }
        }
    }
}

/// |∫ₓ₁^ₓ₂ |ψₙ|² − ∫ₓ₁^ₓ₂ p_cl| — the interval-probability discrepancy
/// between the quantum state and the classical orbit, which shrinks as n
/// grows.
pub fn correspondence_check(state: &Eigenstate, x1: f64, x2: f64) -> Result<f64> {
    let (lo, hi) = state.potential.domain();
    if !(x1 < x2) || x1 < lo || x2 > hi {
        return Err(Error::BadInterval { lo: x1, hi: x2 });
    }
    let quantum = integrate(
        IntegrationRequest::new(
            |x: f64| {
                let v = state.eval(x).unwrap_or(0.0);
                v * v
            },
            x1,
            x2,
        )
        .tolerance(1e-11)
        .nodes_hint(state.node_count() + 1),
    )?;
    let pot = state.potential;
    let classical = integrate(
        IntegrationRequest::new(move |x: f64| pot.classical_density(x).unwrap_or(0.0), x1, x2)
            .tolerance(1e-11),
    )?;
    Ok((quantum.value - classical.value).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_guards() {
        assert!(PotentialSpec::harmonic(0.0).is_err());
        assert!(PotentialSpec::symmetric_well(-1.0).is_err());
        assert!(PotentialSpec::linear_bouncer(1.0, 0.0).is_err());
        let well = PotentialSpec::symmetric_well(1.0).unwrap();
        assert!(Eigenstate::new(well, 0).is_err());
        let sho = PotentialSpec::harmonic(1.0).unwrap();
        assert!(Eigenstate::new(sho, 0).is_ok());
        let bouncer = PotentialSpec::linear_bouncer(1.0, 1.0).unwrap();
        assert!(Eigenstate::new(bouncer, 1).is_err());
        assert!(Eigenstate::bouncer(bouncer, 0, Parity::Odd).is_err());
        assert!(Eigenstate::bouncer(sho, 1, Parity::Odd).is_err());
    }

    #[test]
    fn well_peak_value() {
        // normalized cos(πx/2)/√l peaks at 1 for l = 1
        let well = PotentialSpec::symmetric_well(1.0).unwrap();
        let state = Eigenstate::new(well, 1).unwrap();
        assert!((state.eval(0.0).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn harmonic_odd_state_vanishes_at_origin() {
        let sho = PotentialSpec::harmonic(1.0).unwrap();
        let state = Eigenstate::new(sho, 1).unwrap();
        assert_eq!(state.eval(0.0).unwrap(), 0.0);
        assert_eq!(state.parity(), Parity::Odd);
    }

    #[test]
    fn bouncer_odd_state_vanishes_at_origin() {
        let pot = PotentialSpec::linear_bouncer(1.0, 1.0).unwrap();
        let state = Eigenstate::bouncer(pot, 1, Parity::Odd).unwrap();
        assert!(state.eval(0.0).unwrap().abs() < 1e-9);
        assert!((state.energy() - 2.33811).abs() < 1e-5);
    }

    #[test]
    fn bouncer_even_state_has_flat_origin() {
        let pot = PotentialSpec::linear_bouncer(1.0, 1.0).unwrap();
        let state = Eigenstate::bouncer(pot, 1, Parity::Even).unwrap();
        assert!(state.eval(0.0).unwrap().abs() > 0.01);
        assert!(state.derivative(0.0).unwrap().abs() < 1e-8);
        assert!((state.energy() - 1.01879).abs() < 1e-4);
    }

    #[test]
    fn classical_density_values() {
        let well = PotentialSpec::symmetric_well(1.0).unwrap();
        assert!((well.classical_density(0.3).unwrap() - 0.5).abs() < 1e-15);
        let sho = PotentialSpec::harmonic(1.0).unwrap();
        assert!(
            (sho.classical_density(0.0).unwrap() - 1.0 / core::f64::consts::PI).abs() < 1e-15
        );
        let bouncer = PotentialSpec::linear_bouncer(1.0, 1.0).unwrap();
        assert!((bouncer.classical_density(0.0).unwrap() - 0.25).abs() < 1e-15);
        assert!(matches!(
            sho.classical_density(1.0),
            Err(Error::Singularity { .. })
        ));
        assert!(matches!(
            well.classical_density(1.5),
            Err(Error::OutsideDomain { .. })
        ));
    }

    #[test]
    fn energies_scale_as_expected() {
        let well = PotentialSpec::symmetric_well(1.0).unwrap();
        let e1 = Eigenstate::new(well, 1).unwrap().energy();
        let e2 = Eigenstate::new(well, 2).unwrap().energy();
        assert!((e2 / e1 - 4.0).abs() < 1e-13);
        let sho = PotentialSpec::harmonic(1.0).unwrap();
        assert!((Eigenstate::new(sho, 10).unwrap().energy() - 21.0).abs() < 1e-13);
    }

    #[test]
    fn well_correspondence_is_exact_on_half_domain() {
        let well = PotentialSpec::symmetric_well(1.0).unwrap();
        for n in [1, 2, 7] {
            let state = Eigenstate::new(well, n).unwrap();
            assert!(correspondence_check(&state, -1.0, 0.0).unwrap() < 1e-10);
        }
    }

    #[test]
    fn harmonic_correspondence_improves_with_n() {
        let sho = PotentialSpec::harmonic(1.0).unwrap();
        let coarse = correspondence_check(&Eigenstate::new(sho, 1).unwrap(), 0.2, 0.7).unwrap();
        let fine = correspondence_check(&Eigenstate::new(sho, 25).unwrap(), 0.2, 0.7).unwrap();
        assert!(fine < coarse);
        let n50 = correspondence_check(&Eigenstate::new(sho, 50).unwrap(), 0.0, 0.5).unwrap();
        assert!(n50 < 0.01);
    }
}
