//! One-dimensional kinetic transport in a half-space with collision frequency
//! proportional to the molecular speed.
//!
//! The model equation, in dimensionless form, is
//!
//! ```text
//! sign(μ) ∂h/∂x + h(x,μ) = ∫ exp(-μ'²) |μ'| q₁(μ,μ') h(x,μ') dμ'
//! q₁(μ,μ') = 1 + μμ' + (μ²-1)(μ'²-1)
//! ```
//!
//! posed for x > 0 with diffuse reflection at the wall (h(0,μ)=0 for μ>0) and
//! a Chapman–Enskog far field driven by a temperature gradient `g_T` and a
//! mass velocity `U` (the combined temperature-jump / weak-evaporation
//! problem). The crate provides:
//!
//! - [`kernel`]: the affine-frequency scattering kernel family and its two
//!   limits, with verifiable limit behaviour;
//! - [`quadrature`]: Gaussian integration for the weight exp(-μ²) on the
//!   half-line, plus every macroscopic functional of a distribution;
//! - [`analytic`]: the closed-form solution — decay rate γ₀ = √(5π)/4, jump
//!   coefficients, the distribution h(x,μ) with its μ≷0 branches, and the
//!   macroscopic profiles. The coefficients are re-derived from the moment
//!   system of the equation; where they disagree with the originally
//!   published closed form (which fails the equation itself), the published
//!   values are kept in [`analytic::published`] for comparison;
//! - [`transport`]: an independent discrete-velocity solver of the same
//!   boundary-value problem (source iteration, exact per-cell exponential
//!   sweeps, far field closed by linear extrapolation) that rediscovers γ₀
//!   and the jump coefficients without assuming any polynomial ansatz;
//! - [`verify`]: the cross-check suite wiring all of the above together.
//!
//! `no_std` builds (with `alloc`) are supported by disabling the default
//! `std` feature; float math is then routed through `libm`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod analytic;
pub mod error;
mod fp;
pub mod kernel;
pub mod quadrature;
pub mod tolerances;
pub mod transport;
pub mod verify;

pub mod fit;


pub use error::Error;
pub use quadrature::{CollisionMoments, HalfRangeQuadrature, MacroState};

