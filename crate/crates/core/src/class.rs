//! The class `k-US~_s^eta(lambda, mu, gamma, t)` of negative-coefficient functions.
//!
//! Membership of `f(z) = z - sum a_n z^n` (`a_n >= 0`) is decided by the
//! weighted coefficient inequality
//!
//! ```text
//! sum_{n >= 2} w_n a_n <= 1 - gamma,
//! w_n = Phi^eta(lambda, mu, n) |n (k + 1) - u_n (k + gamma)|,
//! u_n = 1 + t + ... + t^{n-1}.
//! ```
//!
//! The equivalence with the analytic condition on the disk holds for real `t`.
//! Complex `t` is accepted and the inequality is still evaluated, but the
//! sampled analytic condition can fail for such parameters; the disk verifier
//! is the arbiter there.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operator::OperatorParams;
use crate::series::{SignForm, TruncatedSeries, is_finite};

/// Absolute tolerance on the coefficient inequality; boundary cases are members.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassParams {
    op: OperatorParams,
    k: f64,
    gamma: f64,
    t: Complex64,
}

impl ClassParams {
    /// Validates `k >= 0`, `0 <= gamma < 1`, `|t| <= 1` and `t != 1`.
    pub fn new(op: OperatorParams, k: f64, gamma: f64, t: Complex64) -> Result<Self> {
        if !k.is_finite() || k < 0.0 {
            return Err(Error::InvalidParams("k must be finite and non-negative"));
        }
        if !gamma.is_finite() || !(0.0..1.0).contains(&gamma) {
            return Err(Error::InvalidParams("gamma must lie in [0, 1)"));
        }
        if !is_finite(t) || t.norm() > 1.0 {
            return Err(Error::InvalidParams("t must satisfy |t| <= 1"));
        }
        if t == Complex64::new(1.0, 0.0) {
            return Err(Error::InvalidParams("t must differ from 1"));
        }
        Ok(Self { op, k, gamma, t })
    }

    pub fn op(&self) -> &OperatorParams {
        &self.op
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn t(&self) -> Complex64 {
        self.t
    }

    /// Right-hand side `1 - gamma` of the coefficient inequality.
    pub fn budget(&self) -> f64 {
        1.0 - self.gamma
    }

    pub fn multipliers(&self, order: usize) -> Multipliers {
        Multipliers::new(self, order)
    }

    /// `w_n` for a single index `n >= 2`.
    pub fn weight(&self, n: usize) -> f64 {
        assert!(n >= 2, "weights are indexed from n = 2");
        let u = geometric_sum(self.t, n);
        self.weight_from(n, u)
    }

    fn weight_from(&self, n: usize, u: Complex64) -> f64 {
        let nk = n as f64 * (self.k + 1.0);
        self.op.multiplier(n) * (Complex64::new(nk, 0.0) - u * (self.k + self.gamma)).norm()
    }

    /// `sum w_n a_n` for a negative-coefficient series.
    pub fn coefficient_sum(&self, f: &TruncatedSeries) -> Result<f64> {
        if f.form() != SignForm::NegativeCoefficients {
            return Err(Error::Form);
        }
        Ok(self.weighted_modulus_sum(f))
    }

    /// `sum w_n |a_n|` for a series of either form.
    pub fn weighted_modulus_sum(&self, f: &TruncatedSeries) -> f64 {
        let m = self.multipliers(f.order());
        f.terms().map(|(n, a)| m.weight(n) * a.norm()).sum()
    }

    pub fn is_member(&self, f: &TruncatedSeries) -> Result<MembershipVerdict> {
        let sum = self.coefficient_sum(f)?;
        let budget = self.budget();
        Ok(MembershipVerdict {
            member: sum <= budget + MEMBERSHIP_TOLERANCE,
            sum,
            budget,
            slack: budget - sum,
        })
    }

    /// Largest admissible `a_n` for a member: `(1 - gamma) / w_n`.
    pub fn coefficient_bound(&self, n: usize) -> Result<f64> {
        if n < 2 {
            return Err(Error::Domain("coefficient bounds are indexed from n = 2"));
        }
        let w = self.weight(n);
        if w == 0.0 {
            return Err(Error::DegenerateWeight { n });
        }
        Ok(self.budget() / w)
    }

    /// The sharp single-term function `z - (1 - gamma)/w_n z^n`, of order `n`.
    pub fn extremal_function(&self, n: usize) -> Result<TruncatedSeries> {
        let bound = self.coefficient_bound(n)?;
        TruncatedSeries::from_terms(
            SignForm::NegativeCoefficients,
            n,
            [(n, Complex64::new(bound, 0.0))],
        )
    }
}

/// `1 + t + ... + t^{n-1}` by the additive recurrence.
pub fn geometric_sum(t: Complex64, n: usize) -> Complex64 {
    let mut u = Complex64::new(0.0, 0.0);
    let mut tp = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        u += tp;
        tp *= t;
    }
    u
}

/// Per-index data `u_n` (`n = 1..=N`), `Phi^eta(n)` and `w_n` (`n = 2..=N`).
#[derive(Debug, Clone, PartialEq)]
pub struct Multipliers {
    u: Vec<Complex64>,
    phi: Vec<f64>,
    w: Vec<f64>,
}

impl Multipliers {
    fn new(p: &ClassParams, order: usize) -> Self {
        let order = order.max(1);
        let mut u = Vec::with_capacity(order);
        let mut acc = Complex64::new(1.0, 0.0);
        let mut tp = Complex64::new(1.0, 0.0);
        u.push(acc);
        for _ in 2..=order {
            tp *= p.t;
            acc += tp;
            u.push(acc);
        }
        let phi = (1..=order).map(|n| p.op.multiplier(n)).collect();
        let w = (2..=order).map(|n| p.weight_from(n, u[n - 1])).collect();
        Self { u, phi, w }
    }

    pub fn order(&self) -> usize {
        self.u.len()
    }

    /// `u_n`, `1 <= n <= order`.
    pub fn u(&self, n: usize) -> Complex64 {
        self.u[n - 1]
    }

    /// `Phi^eta(lambda, mu, n)`, `1 <= n <= order`.
    pub fn phi(&self, n: usize) -> f64 {
        self.phi[n - 1]
    }

    /// `w_n`, `2 <= n <= order`.
    pub fn weight(&self, n: usize) -> f64 {
        self.w[n - 2]
    }

    pub fn weights(&self) -> &[f64] {
        &self.w
    }
}

/// Outcome of the coefficient-inequality test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipVerdict {
    pub member: bool,
    pub sum: f64,
    pub budget: f64,
    pub slack: f64,
}
