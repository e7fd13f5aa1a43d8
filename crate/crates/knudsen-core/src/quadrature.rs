//! Velocity-space integration with the Maxwellian weight exp(-μ²).
//!
//! Every macroscopic functional in this problem is an integral of the form
//! ∫ exp(-μ²)·(polynomial in μ)·h(μ) dμ, with h possibly discontinuous at
//! μ = 0. The natural tool is a Gaussian rule for the weight exp(-μ²) on
//! [0,∞), applied separately to the two half-lines; with n nodes it is exact
//! on polynomials up to degree 2n-1, which makes most of the crate's checks
//! exact rather than approximate.
//!
//! The rule is built by Stieltjes orthogonalization against the exact weight
//! (discretized on an auxiliary composite Gauss–Legendre grid), followed by
//! the Golub–Welsch eigenvalue step on the Jacobi matrix. Every constructed
//! rule is validated against the Γ-function moment sequence
//! m_p = Γ((p+1)/2)/2 before being returned.

use crate::error::{Error, Result};
use crate::fp;
use crate::tolerances;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// Default node count per half-line. Integrands here are at most quadratic
/// in μ times the weight (plus a bounded layer factor); 40 nodes leave
/// ample headroom below 1e-12 while keeping parameter sweeps cheap.
pub const DEFAULT_NODE_COUNT: usize = 40;

const MIN_NODES: usize = 2;
const MAX_NODES: usize = 256;
const AUX_PANEL_ORDER: usize = 32;

/// m_p = ∫₀^∞ μ^p exp(-μ²) dμ = Γ((p+1)/2)/2, by the two-term recursion
/// m_p = ((p-1)/2)·m_{p-2} from m₀ = √π/2, m₁ = 1/2.
pub fn maxwell_half_moment(p: u32) -> f64 {
    let mut even = fp::sqrt(PI) / 2.0;
    let mut odd = 0.5;
    let mut k = 2;
    while k <= p {
        if k % 2 == 0 {
            even *= (k - 1) as f64 / 2.0;
        } else {
            odd *= (k - 1) as f64 / 2.0;
        }
        k += 1;
    }
    if p % 2 == 0 {
        even
    } else {
        odd
    }
}

/// ln m_p, stable for arbitrary p.
fn ln_maxwell_half_moment(p: u32) -> f64 {
    let mut acc = if p % 2 == 0 {
        fp::ln(fp::sqrt(PI) / 2.0)
    } else {
        fp::ln(0.5)
    };
    let mut k = if p % 2 == 0 { 2 } else { 3 };
    while k <= p {
        acc += fp::ln((k - 1) as f64 / 2.0);
        k += 2;
    }
    acc
}

/// Macroscopic state of a distribution: relative density perturbation,
/// mass velocity (units of the thermal speed), relative temperature
/// perturbation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MacroState {
    pub dn: f64,
    pub u: f64,
    pub dt: f64,
}

/// The three |μ|-weighted moments that close the collision term. The
/// transport right side is `m0 + μ·m1 + (μ²-1)·m2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionMoments {
    pub m0: f64,
    pub m1: f64,
    pub m2: f64,
}

impl CollisionMoments {
    /// Collision source S(μ) = m₀ + μ·m₁ + (μ²-1)·m₂.
    #[inline]
    pub fn source(&self, mu: f64) -> f64 {
        self.m0 + mu * self.m1 + (mu * mu - 1.0) * self.m2
    }
}

/// Gaussian quadrature for ∫₀^∞ exp(-μ²) f(μ) dμ ≈ Σ w_k f(μ_k).
#[derive(Debug, Clone, PartialEq)]
pub struct HalfRangeQuadrature {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl HalfRangeQuadrature {
    /// Builds the n-node rule. Exact on polynomials of degree ≤ 2n-1;
    /// validated against the Γ moments before returning.
    pub fn build(n: usize) -> Result<Self> {
        if !(MIN_NODES..=MAX_NODES).contains(&n) {
            return Err(Error::NodeCount { requested: n });
        }
        let (alpha, beta) = recurrence_coefficients(n)?;

        // Golub–Welsch: nodes are the eigenvalues of the Jacobi matrix,
        // weights are β₀ times the squared first eigenvector components.
        let mut off = vec![0.0; n];
        for i in 0..n - 1 {
            off[i] = fp::sqrt(beta[i + 1]);
        }
        let (mut nodes, first) = symmetric_tridiagonal_eigen(alpha, off)?;
        let mut weights: Vec<f64> = first.iter().map(|z| beta[0] * z * z).collect();

        // Sort ascending; the eigensolver does not order its output.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by(|&i, &j| nodes[i].partial_cmp(&nodes[j]).unwrap());
        nodes = order.iter().map(|&i| nodes[i]).collect();
        weights = order.iter().map(|&i| weights[i]).collect();

        let rule = HalfRangeQuadrature { nodes, weights };
        rule.check_structure()?;
        rule.check_moments()?;
        Ok(rule)
    }

    fn check_structure(&self) -> Result<()> {
        for pair in self.nodes.windows(2) {
            if !(pair[0] < pair[1]) {
                return Err(Error::Domain {
                    what: "constructed nodes must be strictly increasing",
                    value: pair[1],
                });
            }
        }
        if !(self.nodes[0] > 0.0) {
            return Err(Error::Domain {
                what: "constructed nodes must be strictly positive",
                value: self.nodes[0],
            });
        }
        for &w in &self.weights {
            if !(w > 0.0) {
                return Err(Error::Domain {
                    what: "constructed weights must be positive",
                    value: w,
                });
            }
        }
        Ok(())
    }

    /// Relative moment validation for p = 0..2n-1. Sums are computed
    /// directly while the terms fit in f64 and in log space beyond.
    fn check_moments(&self) -> Result<()> {
        let n = self.nodes.len();
        let mu_max = self.nodes[n - 1];
        for p in 0..(2 * n as u32) {
            let rel = if (p as f64) * fp::ln(mu_max) < 600.0 {
                let mut sum = 0.0;
                let mut comp = 0.0;
                for (mu, w) in self.nodes.iter().zip(&self.weights) {
                    kahan(&mut sum, &mut comp, w * fp::powi(*mu, p as i32));
                }
                fp::abs(sum / maxwell_half_moment(p) - 1.0)
            } else {
                // log-sum-exp against ln m_p
                let terms: Vec<f64> = self
                    .nodes
                    .iter()
                    .zip(&self.weights)
                    .map(|(mu, w)| fp::ln(*w) + p as f64 * fp::ln(*mu))
                    .collect();
                let peak = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let sum: f64 = terms.iter().map(|t| fp::exp(t - peak)).sum();
                let ln_sum = peak + fp::ln(sum);
                fp::abs(fp::exp(ln_sum - ln_maxwell_half_moment(p)) - 1.0)
            };
            if !(rel <= tolerances::QUADRATURE_EXACTNESS) {
                return Err(Error::ExactnessCheck {
                    degree: p as usize,
                    relative_error: rel,
                });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// ∫₀^∞ exp(-μ²) f(μ) dμ.
    pub fn integrate_half<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let mut sum = 0.0;
        let mut comp = 0.0;
        for (mu, w) in self.nodes.iter().zip(&self.weights) {
            kahan(&mut sum, &mut comp, w * f(*mu));
        }
        sum
    }

    /// ∫_ℝ exp(-μ²) μ^p h(μ) dμ, via the half-range rule on μ>0 and on the
    /// reflected μ<0 part.
    pub fn full_moment<F: Fn(f64) -> f64>(&self, h: F, p: u32) -> Result<f64> {
        let mut sum = 0.0;
        let mut comp = 0.0;
        for (mu, w) in self.nodes.iter().zip(&self.weights) {
            let plus = h(*mu);
            if !plus.is_finite() {
                return Err(Error::NonFiniteSample { node: *mu });
            }
            let minus = h(-*mu);
            if !minus.is_finite() {
                return Err(Error::NonFiniteSample { node: -*mu });
            }
            let mu_p = fp::powi(*mu, p as i32);
            let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
            kahan(&mut sum, &mut comp, w * mu_p * (plus + sign * minus));
        }
        Ok(sum)
    }

    /// Density, mass velocity and temperature perturbations of a
    /// distribution slice h(μ):
    /// δn/n₀ = (1/√π)∫e^(-μ²)h dμ, U = (1/√π)∫e^(-μ²)μh dμ,
    /// δT/T₀ = (2/√π)∫e^(-μ²)(μ²-1/2)h dμ.
    pub fn macros_from_distribution<F: Fn(f64) -> f64>(&self, h: F) -> Result<MacroState> {
        let inv_sqrt_pi = 1.0 / fp::sqrt(PI);
        let m0 = self.full_moment(&h, 0)?;
        let m1 = self.full_moment(&h, 1)?;
        let m2 = self.full_moment(&h, 2)?;
        Ok(MacroState {
            dn: inv_sqrt_pi * m0,
            u: inv_sqrt_pi * m1,
            dt: 2.0 * inv_sqrt_pi * (m2 - 0.5 * m0),
        })
    }

    /// The |μ'|-weighted collision moments
    /// m_j = ∫e^(-μ'²)|μ'| φ_j(μ') h(μ') dμ' with φ₀=1, φ₁=μ', φ₂=μ'²-1.
    pub fn collision_moments<F: Fn(f64) -> f64>(&self, h: F) -> Result<CollisionMoments> {
        let (mut m0, mut c0) = (0.0, 0.0);
        let (mut m1, mut c1) = (0.0, 0.0);
        let (mut m2, mut c2) = (0.0, 0.0);
        for (mu, w) in self.nodes.iter().zip(&self.weights) {
            let plus = h(*mu);
            if !plus.is_finite() {
                return Err(Error::NonFiniteSample { node: *mu });
            }
            let minus = h(-*mu);
            if !minus.is_finite() {
                return Err(Error::NonFiniteSample { node: -*mu });
            }
            let speed = w * mu; // |μ'| e^(-μ'²) dμ' on each half-line
            kahan(&mut m0, &mut c0, speed * (plus + minus));
            kahan(&mut m1, &mut c1, speed * mu * (plus - minus));
            kahan(&mut m2, &mut c2, speed * (mu * mu - 1.0) * (plus + minus));
        }
        Ok(CollisionMoments { m0, m1, m2 })
    }
}

#[inline]
fn kahan(acc: &mut f64, comp: &mut f64, term: f64) {
    let y = term - *comp;
    let t = *acc + y;
    *comp = (t - *acc) - y;
    *acc = t;
}

/// Three-term recurrence coefficients (α_k, β_k) of the orthonormal
/// polynomials for the weight exp(-μ²) on [0,∞), by the Stieltjes procedure
/// on a composite Gauss–Legendre discretization of the weight. β₀ is the
/// total mass m₀ = √π/2; a non-positive β_k reports the failing degree.
fn recurrence_coefficients(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let reach = (1.5 * fp::sqrt(n as f64) + 10.0).min(26.5);
    let panels = ((reach / 0.4) as usize).max(8);
    let (gl_nodes, gl_weights) = gauss_legendre(AUX_PANEL_ORDER);

    let m = panels * AUX_PANEL_ORDER;
    let mut t = Vec::with_capacity(m);
    let mut w = Vec::with_capacity(m);
    for p in 0..panels {
        let a = reach * p as f64 / panels as f64;
        let b = reach * (p + 1) as f64 / panels as f64;
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for j in 0..AUX_PANEL_ORDER {
            let x = mid + half * gl_nodes[j];
            t.push(x);
            w.push(half * gl_weights[j] * fp::exp(-x * x));
        }
    }

    let mut p_prev = vec![0.0; m];
    let mut p_cur = vec![0.0; m];
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);

    let (mut mass, mut comp) = (0.0, 0.0);
    for &wj in &w {
        kahan(&mut mass, &mut comp, wj);
    }
    beta.push(mass);
    let inv = 1.0 / fp::sqrt(mass);
    for v in p_cur.iter_mut() {
        *v = inv;
    }

    for k in 0..n {
        let (mut a_k, mut ca) = (0.0, 0.0);
        for j in 0..m {
            kahan(&mut a_k, &mut ca, w[j] * t[j] * p_cur[j] * p_cur[j]);
        }
        alpha.push(a_k);
        if k + 1 == n {
            break;
        }
        let sqrt_b = if k == 0 { 0.0 } else { fp::sqrt(beta[k]) };
        let (mut norm, mut cn) = (0.0, 0.0);
        for j in 0..m {
            let q = (t[j] - a_k) * p_cur[j] - sqrt_b * p_prev[j];
            p_prev[j] = p_cur[j];
            p_cur[j] = q;
            kahan(&mut norm, &mut cn, w[j] * q * q);
        }
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::LostPositivity {
                degree: k + 1,
                norm,
            });
        }
        beta.push(norm);
        let inv = 1.0 / fp::sqrt(norm);
        for v in p_cur.iter_mut() {
            *v *= inv;
        }
    }
    Ok((alpha, beta))
}

/// Gauss–Legendre nodes/weights on [-1,1] by Newton iteration on the
/// Legendre recurrence.
fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; m];
    let mut w = vec![0.0; m];
    let mf = m as f64;
    for i in 0..m.div_ceil(2) {
        let mut z = fp::cos(PI * (i as f64 + 0.75) / (mf + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, 0.0);
            for j in 0..m {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = mf * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if fp::abs(dz) < 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[m - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[m - 1 - i] = wi;
    }
    (x, w)
}

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// components of its normalized eigenvectors (QL with implicit shifts).
/// `off[i]` couples rows i and i+1; `off[n-1]` is ignored.
fn symmetric_tridiagonal_eigen(diag: Vec<f64>, off: Vec<f64>) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    let mut d = diag;
    let mut e = off;
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    if n == 1 {
        return Ok((d, z));
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = fp::abs(d[m]) + fp::abs(d[m + 1]);
                if fp::abs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(Error::EigenFailure { index: l });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = fp::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + fp::copysign(r, g));
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = fp::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok((d, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Composite-Simpson oracle for ∫₀^R e^(-μ²) f(μ) dμ, independent of the
    /// Gaussian construction.
    fn simpson_oracle<F: Fn(f64) -> f64>(f: F, reach: f64, intervals: usize) -> f64 {
        let n = intervals + intervals % 2;
        let h = reach / n as f64;
        let g = |x: f64| (-x * x).exp() * f(x);
        let mut sum = g(0.0) + g(reach);
        for i in 1..n {
            let coef = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += coef * g(i as f64 * h);
        }
        sum * h / 3.0
    }

    #[test]
    fn gauss_legendre_matches_reference_five_point() {
        let (x, w) = gauss_legendre(5);
        let x_ref = [
            -0.906_179_845_938_664,
            -0.538_469_310_105_683_1,
            0.0,
            0.538_469_310_105_683_1,
            0.906_179_845_938_664,
        ];
        let w_ref = [
            0.236_926_885_056_189_08,
            0.478_628_670_499_366_47,
            0.568_888_888_888_888_9,
            0.478_628_670_499_366_47,
            0.236_926_885_056_189_08,
        ];
        for i in 0..5 {
            assert_abs_diff_eq!(x[i], x_ref[i], epsilon = 1e-14);
            assert_abs_diff_eq!(w[i], w_ref[i], epsilon = 1e-14);
        }
    }

    #[test]
    fn moment_recursion_matches_gamma_values() {
        assert_abs_diff_eq!(maxwell_half_moment(0), PI.sqrt() / 2.0, epsilon = 1e-16);
        assert_abs_diff_eq!(maxwell_half_moment(1), 0.5, epsilon = 1e-16);
        assert_abs_diff_eq!(maxwell_half_moment(2), PI.sqrt() / 4.0, epsilon = 1e-16);
        assert_abs_diff_eq!(maxwell_half_moment(3), 0.5, epsilon = 1e-16);
        assert_abs_diff_eq!(maxwell_half_moment(4), 3.0 * PI.sqrt() / 8.0, epsilon = 1e-15);
        assert_abs_diff_eq!(maxwell_half_moment(5), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn node_count_bounds_enforced() {
        assert!(matches!(
            HalfRangeQuadrature::build(1),
            Err(Error::NodeCount { requested: 1 })
        ));
        assert!(HalfRangeQuadrature::build(257).is_err());
        assert!(HalfRangeQuadrature::build(2).is_ok());
        assert!(HalfRangeQuadrature::build(256).is_ok());
    }

    #[test]
    fn structure_nodes_positive_increasing_weights_positive() {
        let q = HalfRangeQuadrature::build(40).unwrap();
        assert!(q.nodes()[0] > 0.0);
        assert!(q.nodes().windows(2).all(|p| p[0] < p[1]));
        assert!(q.weights().iter().all(|&w| w > 0.0));
    }

    #[test]
    fn monomial_exactness_across_sizes() {
        for &n in &[2usize, 8, 40, 64] {
            let q = HalfRangeQuadrature::build(n).unwrap();
            for p in 0..2 * n as u32 {
                let sum: f64 = q
                    .nodes()
                    .iter()
                    .zip(q.weights())
                    .map(|(mu, w)| w * mu.powi(p as i32))
                    .sum();
                let exact = maxwell_half_moment(p);
                assert!(
                    (sum / exact - 1.0).abs() <= crate::tolerances::QUADRATURE_EXACTNESS,
                    "n={n} p={p}: {sum} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn low_moments_specific_values() {
        let q = HalfRangeQuadrature::build(12).unwrap();
        let s0: f64 = q.weights().iter().sum();
        assert_abs_diff_eq!(s0, PI.sqrt() / 2.0, epsilon = 1e-13);
        assert_abs_diff_eq!(q.integrate_half(|mu| mu), 0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(q.integrate_half(|mu| mu.powi(3)), 0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(
            q.integrate_half(|mu| mu.powi(4)),
            3.0 * PI.sqrt() / 8.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn simpson_oracle_agrees_on_low_moments() {
        let q = HalfRangeQuadrature::build(8).unwrap();
        for p in [3u32, 4] {
            let oracle = simpson_oracle(|mu| mu.powi(p as i32), 14.0, 60_000);
            assert_abs_diff_eq!(
                q.integrate_half(|mu| mu.powi(p as i32)),
                oracle,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn full_moment_basics() {
        let q = HalfRangeQuadrature::build(8).unwrap();
        assert_abs_diff_eq!(q.full_moment(|_| 1.0, 0).unwrap(), PI.sqrt(), epsilon = 1e-13);
        assert_abs_diff_eq!(
            q.full_moment(|mu| mu.signum(), 0).unwrap(),
            0.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn velocity_mode_orthogonal_to_thermal_mode() {
        // ∫ e^(-μ²) μ [(μ²-3/2)(x - sign μ) - μ/√π] dμ = 0 for any x.
        let q = HalfRangeQuadrature::build(8).unwrap();
        for &x in &[0.0, 1.0, 5.0] {
            let v = q
                .full_moment(
                    |mu| (mu * mu - 1.5) * (x - mu.signum()) - mu / PI.sqrt(),
                    1,
                )
                .unwrap();
            assert_abs_diff_eq!(v, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn constant_mode_orthogonal_to_temperature_mode() {
        let q = HalfRangeQuadrature::build(8).unwrap();
        let v = q.full_moment(|mu| mu * mu - 0.5, 0).unwrap();
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn macros_of_zero_distribution() {
        let q = HalfRangeQuadrature::build(8).unwrap();
        let m = q.macros_from_distribution(|_| 0.0).unwrap();
        assert_eq!(m, MacroState { dn: 0.0, u: 0.0, dt: 0.0 });
    }

    #[test]
    fn macros_of_partial_solutions() {
        let q = HalfRangeQuadrature::build(10).unwrap();
        // h₀ = 1: pure density perturbation.
        let m = q.macros_from_distribution(|_| 1.0).unwrap();
        assert_abs_diff_eq!(m.dn, 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(m.u, 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(m.dt, 0.0, epsilon = 1e-13);
        // h₁ = μ: mass velocity 1/2.
        let m = q.macros_from_distribution(|mu| mu).unwrap();
        assert_abs_diff_eq!(m.u, 0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(m.dn, 0.0, epsilon = 1e-13);
        // h₂ = μ²: δn = 1/2 and δT = 1 (consistent with the δT definition).
        let m = q.macros_from_distribution(|mu| mu * mu).unwrap();
        assert_abs_diff_eq!(m.dn, 0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(m.dt, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn collision_moments_of_reference_slices() {
        let q = HalfRangeQuadrature::build(10).unwrap();
        let m = q.collision_moments(|_| 1.0).unwrap();
        assert_abs_diff_eq!(m.m0, 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(m.m1, 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(m.m2, 0.0, epsilon = 1e-13);

        let m = q.collision_moments(|mu| mu).unwrap();
        assert_abs_diff_eq!(m.m0, 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(m.m1, 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(m.m2, 0.0, epsilon = 1e-13);

        let m = q.collision_moments(|mu| mu.signum()).unwrap();
        assert_abs_diff_eq!(m.m0, 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(m.m1, PI.sqrt() / 2.0, epsilon = 1e-13);
        assert_abs_diff_eq!(m.m2, 0.0, epsilon = 1e-13);
    }

    #[test]
    fn partial_solutions_satisfy_the_equation_through_moments() {
        // For h₀=1, h₁=μ, h₂=μ², h₃=(μ²-3/2)(x-signμ) the collision source
        // reproduces sign(μ)∂h/∂x + h exactly.
        let q = HalfRangeQuadrature::build(12).unwrap();
        let x = 0.7;
        let cases: [(fn(f64, f64) -> f64, fn(f64, f64) -> f64); 4] = [
            (|_x, _mu| 1.0, |_x, _mu| 0.0),
            (|_x, mu| mu, |_x, _mu| 0.0),
            (|_x, mu| mu * mu, |_x, _mu| 0.0),
            (
                |x, mu| (mu * mu - 1.5) * (x - mu.signum()),
                |_x, mu| mu * mu - 1.5,
            ),
        ];
        for (h, dh_dx) in cases {
            let moments = q.collision_moments(|mu| h(x, mu)).unwrap();
            for &mu in &[-2.0f64, -0.4, 0.3, 1.7] {
                let residual = mu.signum() * dh_dx(x, mu) + h(x, mu) - moments.source(mu);
                assert_abs_diff_eq!(residual, 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn non_finite_samples_are_reported_with_the_node() {
        let q = HalfRangeQuadrature::build(6).unwrap();
        let bad = q.nodes()[2];
        let err = q
            .full_moment(|mu| if mu == bad { f64::NAN } else { 0.0 }, 0)
            .unwrap_err();
        assert_eq!(err, Error::NonFiniteSample { node: bad });
    }
}
