//! Partial sums `f_m(z) = z + sum_{n=2}^{m} a_n z^n` and the lower bounds on
//! `Re{f/f_m}`, `Re{f_m/f}`, `Re{f'/f_m'}` and `Re{f_m'/f'}` for functions whose
//! coefficient moduli satisfy `sum delta_n |a_n| <= 1`, where
//! `delta_n = w_n / (1 - gamma)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::class::{ClassParams, MEMBERSHIP_TOLERANCE};
use crate::error::{Error, Result};
use crate::series::{SignForm, TruncatedSeries};
use crate::verifier::{Extremum, GridSpec, RatioProbe, VerificationReport, scan};

/// Keeps `z` and the coefficients `2..=m`; `m >= order` returns `f` unchanged.
pub fn partial_sum(f: &TruncatedSeries, m: usize) -> Result<TruncatedSeries> {
    if m < 1 {
        return Err(Error::Domain("partial sums start at m = 1"));
    }
    f.with_order(m.min(f.order()))
}

/// `delta_n = Phi^eta(n) |n (k + 1) - u_n (k + gamma)| / (1 - gamma)`.
pub fn delta(p: &ClassParams, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain("delta is defined for n >= 2"));
    }
    Ok(p.weight(n) / p.budget())
}

/// Which ordering hypothesis on the `delta_n` fails at which index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideCondition {
    /// `delta_n >= 1` for `2 <= n <= m`.
    AtLeastOne { n: usize },
    /// `delta_n >= delta_{m+1}` for `n > m`.
    TailDominates { n: usize },
    /// `delta_n >= n delta_{m+1} / (m + 1)` for `n > m` (derivative ratios).
    TailGrowsLinearly { n: usize },
}

/// The four ratio bounds, all derived from `delta_{m+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSumBounds {
    pub m: usize,
    pub delta: f64,
    pub bound_f_over_fm: f64,
    pub bound_fm_over_f: f64,
    pub bound_df_over_dfm: f64,
    pub bound_dfm_over_df: f64,
    /// Index range `2..=checked_to` over which the side conditions were evaluated.
    pub checked_to: usize,
    pub failures: Vec<SideCondition>,
}

impl PartialSumBounds {
    pub fn from_delta(m: usize, delta: f64) -> Self {
        let m1 = (m + 1) as f64;
        Self {
            m,
            delta,
            bound_f_over_fm: 1.0 - 1.0 / delta,
            bound_fm_over_f: delta / (1.0 + delta),
            bound_df_over_dfm: 1.0 - m1 / delta,
            bound_dfm_over_df: delta / (m1 + delta),
            checked_to: 0,
            failures: Vec::new(),
        }
    }

    /// True when every side condition held on the checked range.
    pub fn proven(&self) -> bool {
        self.failures.is_empty()
    }

    /// Bounds for the first pair of ratios need only the first two conditions.
    pub fn value_ratios_proven(&self) -> bool {
        !self
            .failures
            .iter()
            .any(|c| !matches!(c, SideCondition::TailGrowsLinearly { .. }))
    }

    pub fn derivative_ratios_proven(&self) -> bool {
        !self.failures.iter().any(|c| {
            matches!(
                c,
                SideCondition::AtLeastOne { .. } | SideCondition::TailGrowsLinearly { .. }
            )
        })
    }

    pub fn as_array(&self) -> [f64; 4] {
        [
            self.bound_f_over_fm,
            self.bound_fm_over_f,
            self.bound_df_over_dfm,
            self.bound_dfm_over_df,
        ]
    }
}

/// Fills the four bounds from `delta_{m+1}` and evaluates the side conditions
/// for `2 <= n <= check_order`. Failing conditions are listed in
/// [`PartialSumBounds::failures`]; the bounds are returned regardless.
pub fn theorem_bounds(p: &ClassParams, m: usize, check_order: usize) -> Result<PartialSumBounds> {
    if m < 1 {
        return Err(Error::Domain("partial sums start at m = 1"));
    }
    let check_order = check_order.max(m + 1);
    let mult = p.multipliers(check_order);
    let budget = p.budget();
    let d = |n: usize| mult.weight(n) / budget;
    let delta = d(m + 1);
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::DegenerateWeight { n: m + 1 });
    }
    let mut bounds = PartialSumBounds::from_delta(m, delta);
    bounds.checked_to = check_order;
    for n in 2..=m {
        if d(n) < 1.0 {
            bounds.failures.push(SideCondition::AtLeastOne { n });
        }
    }
    let slope = delta / (m + 1) as f64;
    for n in (m + 1)..=check_order {
        if d(n) < delta {
            bounds.failures.push(SideCondition::TailDominates { n });
        }
        // relative slack absorbs rounding when delta_n is exactly linear in n
        if d(n) < n as f64 * slope * (1.0 - MEMBERSHIP_TOLERANCE) {
            bounds.failures.push(SideCondition::TailGrowsLinearly { n });
        }
    }
    Ok(bounds)
}

/// `z + z^{m+1} / delta_{m+1}` in general form.
pub fn extremal_partial(p: &ClassParams, m: usize) -> Result<TruncatedSeries> {
    if m < 1 {
        return Err(Error::Domain("partial sums start at m = 1"));
    }
    let d = delta(p, m + 1)?;
    TruncatedSeries::from_terms(
        SignForm::General,
        m + 1,
        [(m + 1, Complex64::new(1.0 / d, 0.0))],
    )
}

/// Argument of the ray on which `z^m = -r^m`, where the extremal ratio is smallest.
pub fn sharpness_ray(m: usize) -> f64 {
    PI / m as f64
}

/// Labels used in the four reports, in the order of [`PartialSumBounds::as_array`].
pub const RATIO_LABELS: [&str; 4] = ["f/fm", "fm/f", "f'/fm'", "fm'/f'"];

/// The four probes `f/f_m`, `f_m/f`, `f'/f_m'`, `f_m'/f'`.
pub fn ratio_probes(f: &TruncatedSeries, m: usize) -> Result<[RatioProbe; 4]> {
    let fm = partial_sum(f, m)?;
    Ok([
        RatioProbe::of_series(f, &fm),
        RatioProbe::of_series(&fm, f),
        RatioProbe::new(f.derivative(), fm.derivative()),
        RatioProbe::new(fm.derivative(), f.derivative()),
    ])
}

/// Requires `sum delta_n |a_n| <= 1` (within the membership tolerance scaled by
/// `1 - gamma`).
pub fn check_hypothesis(p: &ClassParams, f: &TruncatedSeries) -> Result<()> {
    let sum = p.weighted_modulus_sum(f);
    let budget = p.budget();
    if sum > budget + MEMBERSHIP_TOLERANCE {
        return Err(Error::NotMember { sum, budget });
    }
    Ok(())
}

/// Grid minima of the four ratios against their bounds.
pub fn verify_ratio_bounds(
    p: &ClassParams,
    f: &TruncatedSeries,
    m: usize,
    grid: &GridSpec,
) -> Result<[VerificationReport; 4]> {
    verify_ratio_bounds_with(p, f, m, grid, scan::<RatioProbe>)
}

/// [`verify_ratio_bounds`] with a caller-supplied grid scanner.
pub fn verify_ratio_bounds_with<S>(
    p: &ClassParams,
    f: &TruncatedSeries,
    m: usize,
    grid: &GridSpec,
    mut scanner: S,
) -> Result<[VerificationReport; 4]>
where
    S: FnMut(&GridSpec, &RatioProbe) -> Result<Extremum>,
{
    check_hypothesis(p, f)?;
    let bounds = theorem_bounds(p, m, f.order())?.as_array();
    let probes = ratio_probes(f, m)?;
    let mut reports = Vec::with_capacity(4);
    for ((probe, bound), label) in probes.iter().zip(bounds).zip(RATIO_LABELS) {
        let e = scanner(grid, probe)?;
        reports.push(VerificationReport::new(label, grid, e, bound));
    }
    Ok(reports.try_into().expect("four reports"))
}
