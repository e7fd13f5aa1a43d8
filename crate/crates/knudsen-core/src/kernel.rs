//! Scattering kernels for the affine collision-frequency model
//! ν(μ) = ν₀(1 + √π·a·|μ|) and its two limits.
//!
//! For finite `a` the kernel is
//!
//! ```text
//! q(μ,μ',a) = r₀(a) + r₁(a)·μμ' + r₂(a)·(μ²-β(a))(μ'²-β(a))
//! ```
//!
//! and the full scattering factor carries the frequency prefactor
//! (1 + √π·a|μ'|). At a → 0 this collapses to the constant-frequency kernel
//! 1 + 2μμ' + 2(μ²-1/2)(μ'²-1/2); at a → ∞ the prefactored kernel tends to
//! √π|μ'|·q₁(μ,μ') with q₁(μ,μ') = 1 + μμ' + (μ²-1)(μ'²-1), the
//! speed-proportional-frequency model solved by the rest of this crate.

use crate::error::{Error, Result};
use crate::fp;
use core::f64::consts::PI;

/// Collision-frequency model. The speed-proportional limit is a distinct
/// variant rather than a sentinel value of `a`: the two limits have
/// different kernels and different transport operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CollisionFrequency {
    /// ν(μ) = ν₀(1 + √π·a·|μ|) with finite slope `a ≥ 0`.
    Affine { a: f64 },
    /// The a → ∞ limit: ν(μ) = ν₁|μ|.
    SpeedProportional,
}

/// Dimensional scaffolding for the model. Every field here is
/// documentation: the solver works entirely in the dimensionless variables
/// μ = v/v_T and x = (physical x)/l₁.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitsContext {
    pub frequency: CollisionFrequency,
    /// Molecular mass m.
    pub mass: f64,
    /// Boltzmann constant k_B.
    pub boltzmann: f64,
    /// Surface temperature T_s.
    pub surface_temperature: f64,
    /// Saturated-vapour concentration n_s at the surface.
    pub surface_density: f64,
    /// Base collision rate ν₀. In the speed-proportional limit ν₀ → 0 while
    /// ν₁ = √π·ν₀·a stays finite; `nu1` then carries the scale.
    pub nu0: f64,
    /// Speed-proportional rate ν₁.
    pub nu1: f64,
}

impl UnitsContext {
    /// β_s = m / (2 k_B T_s).
    pub fn beta_s(&self) -> f64 {
        self.mass / (2.0 * self.boltzmann * self.surface_temperature)
    }

    /// Thermal speed v_T = 1/√β_s; μ = v / v_T.
    pub fn thermal_speed(&self) -> f64 {
        1.0 / fp::sqrt(self.beta_s())
    }

    /// Relaxation time τ = 1/ν₀ of the affine model.
    pub fn relaxation_time(&self) -> f64 {
        1.0 / self.nu0
    }

    /// Mean free path l = τ·v_T of the affine model.
    pub fn mean_free_path(&self) -> f64 {
        self.relaxation_time() * self.thermal_speed()
    }

    /// τ₁ = 1/ν₁, the time scale of the speed-proportional model.
    pub fn tau1(&self) -> f64 {
        1.0 / self.nu1
    }

    /// l₁ = v_T·τ₁; the dimensionless coordinate is x = (physical x)/l₁.
    pub fn l1(&self) -> f64 {
        self.thermal_speed() * self.tau1()
    }
}

/// The four rational coefficients of the finite-`a` kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelCoefficients {
    pub r0: f64,
    pub r1: f64,
    pub r2: f64,
    pub beta: f64,
}

/// Kernel coefficients for frequency slope `a`:
/// r₀ = 1/(a+1), r₁ = 2/(2a+1), r₂ = 4(a+1)/(4a²+7a+2), β = (2a+1)/(2(a+1)).
pub fn kernel_coefficients(a: f64) -> Result<KernelCoefficients> {
    if !a.is_finite() || a < 0.0 {
        return Err(Error::Domain {
            what: "frequency slope a must be finite and >= 0",
            value: a,
        });
    }
    Ok(KernelCoefficients {
        r0: 1.0 / (a + 1.0),
        r1: 2.0 / (2.0 * a + 1.0),
        r2: 4.0 * (a + 1.0) / (4.0 * a * a + 7.0 * a + 2.0),
        beta: (2.0 * a + 1.0) / (2.0 * (a + 1.0)),
    })
}

/// Full scattering factor of the finite-`a` model:
/// (1 + √π·a|μ'|)·q(μ,μ',a). Not symmetric in (μ,μ'): the frequency
/// prefactor depends on μ' only.
pub fn kernel_affine(mu: f64, mu_prime: f64, a: f64) -> Result<f64> {
    if !mu.is_finite() || !mu_prime.is_finite() {
        return Err(Error::Domain {
            what: "kernel arguments must be finite",
            value: if mu.is_finite() { mu_prime } else { mu },
        });
    }
    let c = kernel_coefficients(a)?;
    let bracket = c.r0
        + c.r1 * mu * mu_prime
        + c.r2 * (mu * mu - c.beta) * (mu_prime * mu_prime - c.beta);
    Ok((1.0 + fp::sqrt(PI) * a * fp::abs(mu_prime)) * bracket)
}

/// Limiting kernel q₁(μ,μ') = 1 + μμ' + (μ²-1)(μ'²-1) of the
/// speed-proportional model. Symmetric in its arguments.
pub fn kernel_q1(mu: f64, mu_prime: f64) -> f64 {
    1.0 + mu * mu_prime + (mu * mu - 1.0) * (mu_prime * mu_prime - 1.0)
}

/// |kernel_affine(μ,μ',a) − √π|μ'|·q₁(μ,μ')|: the distance from the
/// speed-proportional limit. Decays as O(1/a); identically zero for the
/// limit variant itself.
pub fn kernel_limit_deviation(mu: f64, mu_prime: f64, frequency: &CollisionFrequency) -> Result<f64> {
    match *frequency {
        CollisionFrequency::SpeedProportional => Ok(0.0),
        CollisionFrequency::Affine { a } => {
            if !(a > 0.0) {
                return Err(Error::Domain {
                    what: "limit deviation needs a > 0",
                    value: a,
                });
            }
            let limit = fp::sqrt(PI) * fp::abs(mu_prime) * kernel_q1(mu, mu_prime);
            Ok(fp::abs(kernel_affine(mu, mu_prime, a)? - limit))
        }
    }
}
