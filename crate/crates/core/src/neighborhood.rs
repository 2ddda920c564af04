//! The `alpha`-neighborhood of a negative-coefficient function and the
//! inclusion property `N_alpha(f) ⊂ class`.
//!
//! The neighborhood metric weights coefficient differences by `w_n / (1 - gamma)`.
//! The inclusion property is conditional on a hypothesis quantified over all
//! `|eps| < alpha`; [`hypothesis_check`] samples that quantifier on rings, and
//! [`inclusion_property_test`] samples neighborhood members and runs the disk
//! verifier on each. Both are sampled certificates, not proofs.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
// float methods come from libm when std is absent
#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::class::ClassParams;
use crate::error::{Error, Result};
use crate::series::{SignForm, TruncatedSeries};
use crate::verifier::{GRID_TOLERANCE, GridSpec, VerificationReport, grid_min_condition};

pub const DEFAULT_RING_COUNT: usize = 8;
pub const DEFAULT_RING_SAMPLES: usize = 16;

/// Floor on `|gamma (s - 1) - 2 s|` below which the kernel is undefined.
pub const KERNEL_DENOMINATOR_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeighborhoodSpec {
    params: ClassParams,
    alpha: f64,
}

impl NeighborhoodSpec {
    pub fn new(params: ClassParams, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::InvalidParams(
                "alpha must be finite and non-negative",
            ));
        }
        Ok(Self { params, alpha })
    }

    pub fn params(&self) -> &ClassParams {
        &self.params
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

fn require_negative(f: &TruncatedSeries) -> Result<()> {
    if f.form() != SignForm::NegativeCoefficients {
        return Err(Error::Form);
    }
    Ok(())
}

/// `sum_n (w_n / (1 - gamma)) |a_n - b_n|` over `n = 2..=max(order)`.
pub fn distance(p: &ClassParams, f: &TruncatedSeries, g: &TruncatedSeries) -> Result<f64> {
    require_negative(f)?;
    require_negative(g)?;
    let order = f.order().max(g.order());
    let m = p.multipliers(order);
    let budget = p.budget();
    Ok((2..=order)
        .map(|n| m.weight(n) / budget * (f.coeff(n) - g.coeff(n)).norm())
        .sum())
}

pub fn in_neighborhood(
    spec: &NeighborhoodSpec,
    f: &TruncatedSeries,
    g: &TruncatedSeries,
) -> Result<bool> {
    Ok(distance(&spec.params, f, g)? <= spec.alpha)
}

/// Coefficient `c_n` of the convolution kernel `h(z) = z - sum c_n z^n` that
/// encodes the class condition for the unimodular parameter `s` and angle `theta`:
///
/// ```text
/// c_n = Phi^eta(n) [(n - u_n)(1 + k e^{i theta} - s k e^{i theta}) - s (n + u_n) - u_n gamma (1 - s)]
///       / (gamma (s - 1) - 2 s)
/// ```
pub fn kernel_coefficient(
    p: &ClassParams,
    n: usize,
    s: Complex64,
    theta: f64,
) -> Result<Complex64> {
    if n < 2 {
        return Err(Error::Domain("kernel coefficients are indexed from n = 2"));
    }
    if !(s.re.is_finite() && s.im.is_finite()) || (s.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain("s must lie on the unit circle"));
    }
    if !theta.is_finite() {
        return Err(Error::Domain("theta must be finite"));
    }
    let one = Complex64::new(1.0, 0.0);
    let gamma = p.gamma();
    let denominator = (s - one) * gamma - s * 2.0;
    if denominator.norm() < KERNEL_DENOMINATOR_FLOOR {
        return Err(Error::DegenerateDenominator);
    }
    let m = p.multipliers(n);
    let u = m.u(n);
    let nn = Complex64::new(n as f64, 0.0);
    let ke = Complex64::from_polar(p.k(), theta);
    let numerator = (nn - u) * (one + ke - s * ke) - s * (nn + u) - u * gamma * (one - s);
    Ok(numerator * m.phi(n) / denominator)
}

/// `1 - S / (1 - gamma)` where `S` is the coefficient sum of `f`: the largest
/// `rho` such that `(f(z) + eps z)/(1 + eps)` satisfies the coefficient
/// inequality for every `|eps| <= rho`. Negative when `f` is not a member.
pub fn hypothesis_radius(p: &ClassParams, f: &TruncatedSeries) -> Result<f64> {
    Ok(1.0 - p.coefficient_sum(f)? / p.budget())
}

/// `(f(z) + eps z) / (1 + eps)`, whose coefficients are `a_n / (1 + eps)`.
fn perturbed_moduli(f: &TruncatedSeries, eps: Complex64) -> Result<TruncatedSeries> {
    let scale = (Complex64::new(1.0, 0.0) + eps).norm();
    if scale == 0.0 {
        return Err(Error::Domain("1 + eps vanishes"));
    }
    let magnitudes: Vec<f64> = f.terms().map(|(_, a)| a.norm() / scale).collect();
    TruncatedSeries::negative(f.order(), &magnitudes)
}

/// Checks the coefficient inequality for `(f(z) + eps z)/(1 + eps)` at
/// `eps = alpha j / ring_count * e^{2 pi i l / ring_samples}` for
/// `j < ring_count`, `l < ring_samples`; the inequality is applied to the
/// moduli `|a_n / (1 + eps)|`.
pub fn hypothesis_check(
    spec: &NeighborhoodSpec,
    f: &TruncatedSeries,
    ring_samples: usize,
    ring_count: usize,
) -> Result<bool> {
    require_negative(f)?;
    if ring_count == 0 || ring_samples == 0 {
        return Err(Error::Domain(
            "need at least one ring and one sample per ring",
        ));
    }
    for j in 0..ring_count {
        let radius = spec.alpha * j as f64 / ring_count as f64;
        for l in 0..ring_samples {
            let eps = Complex64::from_polar(radius, 2.0 * PI * l as f64 / ring_samples as f64);
            let g = perturbed_moduli(f, eps)?;
            if !spec.params.is_member(&g)?.member {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Draws a member of `N_alpha(f)` truncated at `order`.
///
/// A fraction `beta ~ U[0, 1)` of the `alpha` budget is split across
/// `n = 2..=order` with flat Dirichlet weights; coefficient `n` moves by
/// `beta alpha share_n (1 - gamma) / w_n` in a random direction and is clamped
/// at zero, so the distance to `f` never exceeds `alpha`.
pub fn sample_neighbor<R: Rng + ?Sized>(
    spec: &NeighborhoodSpec,
    f: &TruncatedSeries,
    order: usize,
    rng: &mut R,
) -> Result<TruncatedSeries> {
    require_negative(f)?;
    let order = order.max(f.order());
    if order < 2 {
        return Ok(f.clone());
    }
    let m = spec.params.multipliers(order);
    let beta: f64 = rng.random();
    let gaps: Vec<f64> = (2..=order)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let total: f64 = gaps.iter().sum();
    let budget = spec.alpha * beta * spec.params.budget();
    let magnitudes: Vec<f64> = (2..=order)
        .zip(&gaps)
        .map(|(n, gap)| {
            let step = budget * gap / total / m.weight(n);
            let a = f.coeff(n).re;
            if rng.random::<bool>() {
                a + step
            } else {
                (a - step).max(0.0)
            }
        })
        .collect();
    TruncatedSeries::negative(order, &magnitudes)
}

/// Aggregate of [`inclusion_property_test`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InclusionReport {
    pub alpha: f64,
    pub trials: usize,
    pub passes: usize,
    pub min_grid_margin: f64,
    pub seed: u64,
}

impl InclusionReport {
    pub fn all_pass(&self) -> bool {
        self.passes == self.trials
    }
}

/// Samples `trials` neighbors of `f` (seeded, order `order`) and runs the disk
/// verifier on each; a neighbor passes when its grid minimum is at least
/// `-GRID_TOLERANCE`.
pub fn inclusion_property_test(
    spec: &NeighborhoodSpec,
    f: &TruncatedSeries,
    trials: usize,
    order: usize,
    grid: &GridSpec,
    seed: u64,
) -> Result<InclusionReport> {
    inclusion_property_test_with(spec, f, trials, order, grid, seed, grid_min_condition)
}

/// [`inclusion_property_test`] with a caller-supplied grid verifier.
pub fn inclusion_property_test_with<V>(
    spec: &NeighborhoodSpec,
    f: &TruncatedSeries,
    trials: usize,
    order: usize,
    grid: &GridSpec,
    seed: u64,
    mut verify: V,
) -> Result<InclusionReport>
where
    V: FnMut(&ClassParams, &TruncatedSeries, &GridSpec) -> Result<VerificationReport>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passes = 0;
    let mut min_margin = f64::INFINITY;
    for _ in 0..trials {
        let g = sample_neighbor(spec, f, order, &mut rng)?;
        debug_assert!(distance(&spec.params, f, &g)? <= spec.alpha * (1.0 + 1e-12) + 1e-15);
        let report = verify(&spec.params, &g.with_order(g.effective_order())?, grid)?;
        if report.minimum >= -GRID_TOLERANCE {
            passes += 1;
        }
        min_margin = min_margin.min(report.minimum);
    }
    Ok(InclusionReport {
        alpha: spec.alpha,
        trials,
        passes,
        min_grid_margin: min_margin,
        seed,
    })
}
