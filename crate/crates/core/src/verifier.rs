//! Polar-grid sampling of the open unit disk.
//!
//! Infima over the disk are estimated by evaluating a [`Probe`] on every point
//! of a [`GridSpec`] and reducing with [`Extremum::min`], which orders by value
//! and breaks ties by grid index. The reduction is associative and commutative,
//! so any partition of the grid (see the `gft` crate's parallel scanner) yields
//! the same minimum and argmin as [`scan`].

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
// float methods come from libm when std is absent
#[allow(unused_imports)]
use num_traits::Float;

use crate::class::ClassParams;
use crate::error::{Error, Result};
use crate::series::{Polynomial, TruncatedSeries};

pub const DEFAULT_R_MIN: f64 = 0.01;
pub const DEFAULT_R_MAX: f64 = 0.999;
pub const DEFAULT_RADII: usize = 64;
pub const DEFAULT_THETA_COUNT: usize = 720;

/// Margin allowed below a bound before a grid check fails.
pub const GRID_TOLERANCE: f64 = 1e-6;

/// `|D f(z) - D f(tz)| < CONDITION_DENOMINATOR_FLOOR |z|` counts as a zero.
pub const CONDITION_DENOMINATOR_FLOOR: f64 = 1e-12;
/// `|f_m(z) / z| < RATIO_DENOMINATOR_FLOOR` counts as a zero.
pub const RATIO_DENOMINATOR_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub theta: f64,
}

impl PolarPoint {
    pub const ORIGIN: PolarPoint = PolarPoint { r: 0.0, theta: 0.0 };

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(self.r, self.theta)
    }
}

/// Radii times uniform angles, plus optional extra rays at fixed arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    r_values: Vec<f64>,
    theta_count: usize,
    rays: Vec<f64>,
    thetas: Vec<f64>,
}

fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    } else if t <= -PI {
        t += 2.0 * PI;
    }
    t
}

impl GridSpec {
    pub fn new(r_values: Vec<f64>, theta_count: usize, rays: Vec<f64>) -> Result<Self> {
        if r_values.is_empty() {
            return Err(Error::Domain("grid needs at least one radius"));
        }
        if r_values
            .iter()
            .any(|r| !(r.is_finite() && *r > 0.0 && *r < 1.0))
        {
            return Err(Error::Domain("grid radii must lie in (0, 1)"));
        }
        if theta_count < 8 {
            return Err(Error::Domain("grid needs at least 8 angles"));
        }
        if rays.iter().any(|t| !t.is_finite()) {
            return Err(Error::Domain("ray arguments must be finite"));
        }
        let rays: Vec<f64> = rays.into_iter().map(wrap_angle).collect();
        let mut thetas: Vec<f64> = (0..theta_count)
            .map(|j| {
                // exact negation pairs j <-> count - j keep the grid conjugation-symmetric
                if 2 * j <= theta_count {
                    2.0 * PI * j as f64 / theta_count as f64
                } else {
                    -(2.0 * PI * (theta_count - j) as f64 / theta_count as f64)
                }
            })
            .collect();
        thetas.extend_from_slice(&rays);
        Ok(Self {
            r_values,
            theta_count,
            rays,
            thetas,
        })
    }

    /// `count` radii with `1 - r` log-spaced between `1 - r_min` and `1 - r_max`.
    pub fn log_spaced(count: usize, r_min: f64, r_max: f64, theta_count: usize) -> Result<Self> {
        if !(r_min > 0.0 && r_min <= r_max && r_max < 1.0) {
            return Err(Error::Domain("need 0 < r_min <= r_max < 1"));
        }
        if count == 0 {
            return Err(Error::Domain("grid needs at least one radius"));
        }
        let lo = (1.0 - r_min).ln();
        let hi = (1.0 - r_max).ln();
        let r_values = (0..count)
            .map(|i| {
                if i + 1 == count {
                    r_max
                } else {
                    1.0 - (lo + (hi - lo) * i as f64 / (count - 1) as f64).exp()
                }
            })
            .collect();
        Self::new(r_values, theta_count, Vec::new())
    }

    pub fn with_ray(mut self, theta: f64) -> Self {
        let theta = wrap_angle(theta);
        self.rays.push(theta);
        self.thetas.push(theta);
        self
    }

    /// A grid containing every point of `self`, with a geometric midpoint (in
    /// `1 - r`) between consecutive radii and twice as many uniform angles.
    pub fn refined(&self) -> Self {
        let mut r_values = Vec::with_capacity(2 * self.r_values.len());
        for pair in self.r_values.windows(2) {
            r_values.push(pair[0]);
            let mid = 1.0 - ((1.0 - pair[0]) * (1.0 - pair[1])).sqrt();
            r_values.push(mid);
        }
        r_values.extend(self.r_values.last());
        Self::new(r_values, 2 * self.theta_count, self.rays.clone())
            .expect("refinement of a valid grid is valid")
    }

    pub fn r_values(&self) -> &[f64] {
        &self.r_values
    }

    pub fn theta_count(&self) -> usize {
        self.theta_count
    }

    pub fn rays(&self) -> &[f64] {
        &self.rays
    }

    /// Uniform angles in `(-pi, pi]` followed by the extra rays.
    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn r_max(&self) -> f64 {
        self.r_values.iter().copied().fold(0.0, f64::max)
    }

    pub fn len(&self) -> usize {
        self.r_values.len() * self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Point `index` in radius-major order.
    pub fn point(&self, index: usize) -> PolarPoint {
        let per = self.thetas.len();
        PolarPoint {
            r: self.r_values[index / per],
            theta: self.thetas[index % per],
        }
    }

    pub fn points(&self) -> impl Iterator<Item = PolarPoint> + '_ {
        self.r_values.iter().flat_map(move |&r| {
            self.thetas
                .iter()
                .map(move |&theta| PolarPoint { r, theta })
        })
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self::log_spaced(
            DEFAULT_RADII,
            DEFAULT_R_MIN,
            DEFAULT_R_MAX,
            DEFAULT_THETA_COUNT,
        )
        .expect("default grid is valid")
    }
}

/// A real-valued function sampled over the disk.
pub trait Probe: Sync {
    fn value(&self, at: PolarPoint) -> Result<f64>;

    /// Whether the origin joins the scan as candidate 0.
    fn includes_origin(&self) -> bool {
        false
    }
}

/// Smallest value seen so far, with the candidate index that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub value: f64,
    pub index: usize,
    pub point: PolarPoint,
}

impl Extremum {
    /// Order-independent minimum: lower value wins, ties go to the lower index.
    pub fn min(self, other: Self) -> Self {
        match self.value.total_cmp(&other.value) {
            core::cmp::Ordering::Less => self,
            core::cmp::Ordering::Greater => other,
            core::cmp::Ordering::Equal => {
                if self.index <= other.index {
                    self
                } else {
                    other
                }
            }
        }
    }
}

/// Number of candidates a probe sees on `grid` (grid points plus maybe the origin).
pub fn candidate_count<P: Probe + ?Sized>(grid: &GridSpec, probe: &P) -> usize {
    grid.len() + usize::from(probe.includes_origin())
}

/// Candidate `index`: the origin first when the probe asks for it, then grid points.
pub fn candidate<P: Probe + ?Sized>(grid: &GridSpec, probe: &P, index: usize) -> PolarPoint {
    if probe.includes_origin() {
        if index == 0 {
            PolarPoint::ORIGIN
        } else {
            grid.point(index - 1)
        }
    } else {
        grid.point(index)
    }
}

/// Evaluates candidate `index`, rejecting non-finite values.
pub fn evaluate_candidate<P: Probe + ?Sized>(
    grid: &GridSpec,
    probe: &P,
    index: usize,
) -> Result<Extremum> {
    let point = candidate(grid, probe, index);
    let value = probe.value(point)?;
    if !value.is_finite() {
        return Err(Error::NonFinite {
            r: point.r,
            theta: point.theta,
        });
    }
    Ok(Extremum {
        value,
        index,
        point,
    })
}

/// Sequential minimum over all candidates; the first failing candidate aborts.
pub fn scan<P: Probe + ?Sized>(grid: &GridSpec, probe: &P) -> Result<Extremum> {
    let mut best: Option<Extremum> = None;
    for index in 0..candidate_count(grid, probe) {
        let e = evaluate_candidate(grid, probe, index)?;
        best = Some(match best {
            Some(b) => b.min(e),
            None => e,
        });
    }
    best.ok_or(Error::Domain("empty grid"))
}

/// `G(z) = Re W - k |W - 1| - gamma` with
/// `W = (1 - t) z (D f)'(z) / (D f(z) - D f(tz))`.
///
/// Writing `D f(z) = z + sum s_n z^n`, the identity `1 - t^n = (1 - t) u_n`
/// turns `W` into `(1 + sum n s_n z^{n-1}) / (1 + sum u_n s_n z^{n-1})`, which is
/// what gets evaluated; the removable singularity at the origin disappears.
#[derive(Debug, Clone)]
pub struct ConditionProbe {
    k: f64,
    gamma: f64,
    one_minus_t: f64,
    numerator: Polynomial,
    denominator: Polynomial,
}

impl ConditionProbe {
    pub fn new(p: &ClassParams, f: &TruncatedSeries) -> Self {
        let df = p.op().apply_closed(f);
        let order = df.order();
        let m = p.multipliers(order);
        let numerator = (1..=order).map(|n| df.signed_coeff(n) * n as f64).collect();
        let denominator = (1..=order).map(|n| df.signed_coeff(n) * m.u(n)).collect();
        Self {
            k: p.k(),
            gamma: p.gamma(),
            one_minus_t: (Complex64::new(1.0, 0.0) - p.t()).norm(),
            numerator: Polynomial::new(numerator),
            denominator: Polynomial::new(denominator),
        }
    }

    /// `W(z)`, or `None` where `D f(z) - D f(tz)` vanishes.
    pub fn w(&self, z: Complex64) -> Option<Complex64> {
        let q = self.denominator.eval_unchecked(z);
        if self.one_minus_t * q.norm() < CONDITION_DENOMINATOR_FLOOR {
            return None;
        }
        Some(self.numerator.eval_unchecked(z) / q)
    }
}

impl Probe for ConditionProbe {
    fn value(&self, at: PolarPoint) -> Result<f64> {
        let w = self.w(at.to_complex()).ok_or(Error::ZeroDenominator {
            r: at.r,
            theta: at.theta,
        })?;
        Ok(w.re - self.k * (w - 1.0).norm() - self.gamma)
    }

    fn includes_origin(&self) -> bool {
        true
    }
}

/// `Re{numerator(z) / denominator(z)}`.
#[derive(Debug, Clone)]
pub struct RatioProbe {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RatioProbe {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    /// `f / g` for normalized series, evaluated as `(f/z) / (g/z)`.
    pub fn of_series(numer: &TruncatedSeries, denom: &TruncatedSeries) -> Self {
        Self::new(numer.quotient_by_z(), denom.quotient_by_z())
    }
}

impl Probe for RatioProbe {
    fn value(&self, at: PolarPoint) -> Result<f64> {
        let z = at.to_complex();
        let d = self.denominator.eval_unchecked(z);
        if d.norm() < RATIO_DENOMINATOR_FLOOR {
            return Err(Error::ZeroDenominator {
                r: at.r,
                theta: at.theta,
            });
        }
        Ok((self.numerator.eval_unchecked(z) / d).re)
    }
}

/// Grid minimum of a quantity compared against a lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub quantity: String,
    pub grid: GridSpec,
    pub minimum: f64,
    pub argmin: PolarPoint,
    pub bound: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(quantity: &str, grid: &GridSpec, extremum: Extremum, bound: f64) -> Self {
        Self {
            quantity: String::from(quantity),
            grid: grid.clone(),
            minimum: extremum.value,
            argmin: extremum.point,
            bound,
            tolerance: GRID_TOLERANCE,
            pass: extremum.value >= bound - GRID_TOLERANCE,
        }
    }

    pub fn margin(&self) -> f64 {
        self.minimum - self.bound
    }
}

/// `G(z)` at a single point of the open disk; `1 - gamma` at the origin.
pub fn condition_value(p: &ClassParams, f: &TruncatedSeries, z: Complex64) -> Result<f64> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
        return Err(Error::Domain("point must lie in the open unit disk"));
    }
    let at = PolarPoint {
        r: z.norm(),
        theta: z.arg(),
    };
    let probe = ConditionProbe::new(p, f);
    let w = probe.w(z).ok_or(Error::ZeroDenominator {
        r: at.r,
        theta: at.theta,
    })?;
    Ok(w.re - p.k() * (w - 1.0).norm() - p.gamma())
}

/// Minimum of `G` over the grid and the origin, checked against the bound 0.
pub fn grid_min_condition(
    p: &ClassParams,
    f: &TruncatedSeries,
    grid: &GridSpec,
) -> Result<VerificationReport> {
    let probe = ConditionProbe::new(p, f);
    let e = scan(grid, &probe)?;
    Ok(VerificationReport::new("condition", grid, e, 0.0))
}

/// Minimum of `Re{numer(z) / denom(z)}` for normalized series.
pub fn grid_min_ratio(
    numer: &TruncatedSeries,
    denom: &TruncatedSeries,
    grid: &GridSpec,
) -> Result<VerificationReport> {
    let probe = RatioProbe::of_series(numer, denom);
    let e = scan(grid, &probe)?;
    Ok(VerificationReport::new("ratio", grid, e, f64::NEG_INFINITY))
}
