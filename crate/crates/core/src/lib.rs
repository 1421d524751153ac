//! Position probability densities for systems of mutually exclusive
//! particles in one dimension.
//!
//! A rigid body with linear mass density λ(x) is replaced by a finite set of
//! particles whose position densities have pairwise disjoint supports. The
//! construction multiplies λ by the squared bound-state eigenfunction of a
//! reference potential and divides by the classical position density of the
//! same potential; the interior nodes of the eigenfunction then partition the
//! domain into one cell per particle. As the quantum number grows, the moments
//! of the partitioned density converge to the continuum moments of λ.
//!
//! The crate is organised bottom-up:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`specfun`] | Hermite polynomials, Airy Ai and its zeros, Gamma-moment integrals |
//! | [`quadrature`] | Adaptive integration with inverse-square-root endpoint handling |
//! | [`potentials`] | Infinite well, harmonic oscillator, symmetric linear potential |
//! | [`mass_density`] | Linear mass densities λ(x) of the bodies being discretised |
//! | [`exclusion`] | The λ·|ψ|²/p_cl construction, admissibility checks, partitions |
//! | [`moments`] | Moments by quadrature and closed form, continuum-limit sweeps |
//!
//! The core is `no_std` (with `alloc`); all floating-point math goes through
//! `libm` so results are identical on every platform.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exclusion;
pub mod mass_density;
pub mod moments;
pub mod potentials;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
pub use exclusion::{
    center_of_mass_crosscheck, AdmissibilityReport, Component, DiscreteSystem, ExclusionDensity,
};
pub use mass_density::MassDensity;
pub use moments::MomentResult;
pub use potentials::{Eigenstate, PotentialSpec};
pub use quadrature::{IntegrationRequest, IntegrationResult};
