//! The conic region `R_{k,gamma} = { w = u + iv : u > k |w - 1| + gamma }` and
//! the two half-plane equivalences used to rewrite the class condition.

use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicSpec {
    k: f64,
    gamma: f64,
}

/// Shape of the boundary of `R_{k,gamma}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicKind {
    HalfPlane,
    Hyperbolic,
    Parabolic,
    Elliptic,
}

impl ConicKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConicKind::HalfPlane => "half-plane",
            ConicKind::Hyperbolic => "hyperbolic",
            ConicKind::Parabolic => "parabolic",
            ConicKind::Elliptic => "elliptic",
        }
    }
}

impl fmt::Display for ConicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl ConicSpec {
    pub fn new(k: f64, gamma: f64) -> Result<Self> {
        if !k.is_finite() || k < 0.0 {
            return Err(Error::InvalidParams("k must be finite and non-negative"));
        }
        if !gamma.is_finite() || !(0.0..1.0).contains(&gamma) {
            return Err(Error::InvalidParams("gamma must lie in [0, 1)"));
        }
        Ok(Self { k, gamma })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn contains(&self, w: Complex64) -> bool {
        w.re > self.k * (w - 1.0).norm() + self.gamma
    }

    pub fn classify(&self) -> ConicKind {
        if self.k == 0.0 {
            ConicKind::HalfPlane
        } else if self.k < 1.0 {
            ConicKind::Hyperbolic
        } else if self.k == 1.0 {
            ConicKind::Parabolic
        } else {
            ConicKind::Elliptic
        }
    }
}

/// The two sides of an equivalence, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceCheck {
    pub lhs: bool,
    pub rhs: bool,
}

impl EquivalenceCheck {
    pub fn agrees(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Re w >= alpha`  versus  `|w - (1 + alpha)| <= |w + (1 - alpha)|`.
pub fn lemma1_check(w: Complex64, alpha: f64) -> EquivalenceCheck {
    let x = w.re - alpha;
    let left = Complex64::new(x - 1.0, w.im).norm();
    let right = Complex64::new(x + 1.0, w.im).norm();
    EquivalenceCheck {
        lhs: w.re >= alpha,
        rhs: left <= right,
    }
}

/// `Re w > alpha |w - 1| + gamma`  versus  `Re{w (1 + alpha e^{i theta}) - alpha e^{i theta}} > gamma`
/// for every `theta` in `(-pi, pi]`.
///
/// The right side is decided by the envelope over `theta`, attained where
/// `(w - 1) e^{i theta}` points along the negative real axis, together with a
/// uniform grid of `theta_samples` angles as a cross-check.
pub fn lemma2_check(
    w: Complex64,
    alpha: f64,
    gamma: f64,
    theta_samples: usize,
) -> Result<EquivalenceCheck> {
    if theta_samples < 8 {
        return Err(Error::Domain("at least 8 theta samples are required"));
    }
    let lhs = w.re > alpha * (w - 1.0).norm() + gamma;

    let value = |theta: f64| {
        let e = Complex64::from_polar(1.0, theta);
        (w * (e * alpha + 1.0) - e * alpha).re
    };
    // Re{w + alpha (w - 1) e^{i theta}} >= Re w - |alpha| |w - 1|, with equality at
    // theta = pi - arg(w - 1).
    let envelope = w.re - alpha.abs() * (w - 1.0).norm();
    let grid_ok = (0..theta_samples).all(|j| {
        let theta = -PI + 2.0 * PI * (j + 1) as f64 / theta_samples as f64;
        value(theta) > gamma
    });
    let rhs = envelope > gamma && grid_ok;
    Ok(EquivalenceCheck { lhs, rhs })
}
