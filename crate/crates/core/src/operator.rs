//! The linear multiplier differential operator `D^eta_{lambda,mu}`.
//!
//! One application acts on `f` as
//!
//! ```text
//! D f = lambda mu z^2 f'' + (lambda - mu) z f' + (1 - lambda + mu) f
//! ```
//!
//! and on a monomial `z^n` this is multiplication by
//! `1 + (lambda mu n + lambda - mu)(n - 1)`. The closed form raises that
//! multiplier to the power `eta`; the recursive form applies the one-step rule
//! `eta` times. Both are provided so one can check the other.

use alloc::vec::Vec;

use num_complex::Complex64;
// float methods come from libm when std is absent
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::series::{SignForm, TruncatedSeries};

/// Above this exponent the multiplier power falls back to `powi`.
const REPEATED_MULTIPLICATION_LIMIT: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorParams {
    lambda: f64,
    mu: f64,
    eta: u32,
}

impl OperatorParams {
    /// Requires `lambda >= mu >= 0`, both finite.
    pub fn new(lambda: f64, mu: f64, eta: u32) -> Result<Self> {
        if !lambda.is_finite() || !mu.is_finite() {
            return Err(Error::InvalidParams("lambda and mu must be finite"));
        }
        if mu < 0.0 {
            return Err(Error::InvalidParams("mu must be non-negative"));
        }
        if lambda < mu {
            return Err(Error::InvalidParams("lambda must be at least mu"));
        }
        Ok(Self { lambda, mu, eta })
    }

    /// The Salagean operator `D^eta` (`lambda = 1`, `mu = 0`).
    pub fn salagean(eta: u32) -> Self {
        Self {
            lambda: 1.0,
            mu: 0.0,
            eta,
        }
    }

    /// The Al-Oboudi operator `D^eta_lambda` (`mu = 0`).
    pub fn al_oboudi(lambda: f64, eta: u32) -> Result<Self> {
        Self::new(lambda, 0.0, eta)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    /// `1 + (lambda mu n + lambda - mu)(n - 1)`, the one-step multiplier of `z^n`.
    #[inline]
    pub fn base(&self, n: usize) -> f64 {
        let n = n as f64;
        1.0 + (self.lambda * self.mu * n + self.lambda - self.mu) * (n - 1.0)
    }

    /// `Phi^eta(lambda, mu, n)`; `n` must be at least 1.
    pub fn phi(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::Domain("multiplier index must be at least 1"));
        }
        let base = self.base(n);
        if base < 0.0 {
            return Err(Error::Domain("multiplier base is negative"));
        }
        Ok(self.power(base))
    }

    /// `phi` for indices already known to be valid.
    #[inline]
    pub(crate) fn multiplier(&self, n: usize) -> f64 {
        debug_assert!(n >= 1);
        let base = self.base(n);
        debug_assert!(base >= 0.0, "lambda >= mu >= 0 keeps the base >= 1");
        self.power(base)
    }

    fn power(&self, base: f64) -> f64 {
        if self.eta <= REPEATED_MULTIPLICATION_LIMIT {
            let mut acc = 1.0;
            for _ in 0..self.eta {
                acc *= base;
            }
            acc
        } else {
            base.powi(self.eta as i32)
        }
    }

    /// `D^eta f` via the closed multiplier form.
    pub fn apply_closed(&self, f: &TruncatedSeries) -> TruncatedSeries {
        f.map_coeffs(|n, a| a * self.multiplier(n))
    }

    /// `D^eta f` via `eta` applications of the differential one-step rule.
    pub fn apply_recursive(&self, f: &TruncatedSeries) -> TruncatedSeries {
        let mut g = f.clone();
        for _ in 0..self.eta {
            g = self.step(&g);
        }
        g
    }

    /// One application `lambda mu z^2 f'' + (lambda - mu) z f' + (1 - lambda + mu) f`,
    /// assembled from the coefficient lists of `z^2 f''`, `z f'` and `f`.
    pub fn step(&self, f: &TruncatedSeries) -> TruncatedSeries {
        let p = f.to_polynomial();
        let first = p.derivative();
        let second = first.derivative();
        let c2 = self.lambda * self.mu;
        let c1 = self.lambda - self.mu;
        let c0 = 1.0 - self.lambda + self.mu;
        let combined: Vec<Complex64> = (0..p.coeffs().len())
            .map(|j| {
                // [z^j] z^2 f'' = j(j-1) c_j = second[j-2]; [z^j] z f' = j c_j = first[j-1]
                let zz_f2 = if j >= 2 {
                    second.coeff(j - 2)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                let z_f1 = if j >= 1 {
                    first.coeff(j - 1)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                zz_f2 * c2 + z_f1 * c1 + p.coeff(j) * c0
            })
            .collect();
        f.map_coeffs(|n, _| match f.form() {
            SignForm::General => combined[n],
            SignForm::NegativeCoefficients => Complex64::new(-combined[n].re, 0.0),
        })
    }
}
