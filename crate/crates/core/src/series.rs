//! Truncated power series normalized to a leading `z` term.
//!
//! A [`TruncatedSeries`] of order `N` represents either
//!
//! ```text
//! General:              f(z) = z + a_2 z^2 + ... + a_N z^N    (a_n complex)
//! NegativeCoefficients: f(z) = z - a_2 z^2 - ... - a_N z^N    (a_n real, >= 0)
//! ```
//!
//! Only `a_2 ... a_N` are stored; the unit coefficient of `z` is implicit.
//! Operations that leave the normalized family (derivatives, `f(tz)`) return a
//! dense [`Polynomial`] instead.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Default truncation order used by the CLI and samplers.
pub const DEFAULT_ORDER: usize = 64;

/// Sign convention of the stored coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignForm {
    General,
    NegativeCoefficients,
}

pub(crate) fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

fn check_open_disk(z: Complex64) -> Result<()> {
    if !is_finite(z) {
        return Err(Error::Domain("point must be finite"));
    }
    if z.norm() >= 1.0 {
        return Err(Error::Domain("point must lie in the open unit disk"));
    }
    Ok(())
}

/// Horner evaluation of `c_0 + c_1 z + ... + c_d z^d`.
#[inline]
pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * z + c)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    order: usize,
    form: SignForm,
    // a_2 ..= a_order, always exactly order - 1 entries
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// The identity function `f(z) = z` of the given order.
    pub fn identity(order: usize, form: SignForm) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSeries("order must be at least 1"));
        }
        Ok(Self {
            order,
            form,
            coeffs: vec![Complex64::zero(); order - 1],
        })
    }

    /// `z + sum a_n z^n` from the list `a_2, a_3, ...`; missing entries are zero.
    pub fn general(order: usize, coeffs: &[Complex64]) -> Result<Self> {
        let mut s = Self::identity(order, SignForm::General)?;
        if coeffs.len() > order - 1 {
            return Err(Error::InvalidSeries(
                "more coefficients than the order allows",
            ));
        }
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            if !is_finite(c) {
                return Err(Error::InvalidSeries("coefficients must be finite"));
            }
            *slot = c;
        }
        Ok(s)
    }

    /// `z - sum a_n z^n` from magnitudes `a_2, a_3, ...` (all `>= 0`).
    pub fn negative(order: usize, magnitudes: &[f64]) -> Result<Self> {
        let mut s = Self::identity(order, SignForm::NegativeCoefficients)?;
        if magnitudes.len() > order - 1 {
            return Err(Error::InvalidSeries(
                "more coefficients than the order allows",
            ));
        }
        for (slot, &a) in s.coeffs.iter_mut().zip(magnitudes) {
            if !a.is_finite() || a < 0.0 {
                return Err(Error::InvalidSeries(
                    "negative-form coefficients must be finite and non-negative",
                ));
            }
            *slot = Complex64::new(a, 0.0);
        }
        Ok(s)
    }

    /// Builds a series from sparse `(n, a_n)` terms with strict validation:
    /// `2 <= n <= order`, no duplicates, finite values, and real non-negative
    /// values for the negative form.
    pub fn from_terms<I>(form: SignForm, order: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Complex64)>,
    {
        let mut s = Self::identity(order, form)?;
        let mut seen = vec![false; order + 1];
        for (n, c) in terms {
            if n < 2 {
                return Err(Error::InvalidSeries("coefficient index must be at least 2"));
            }
            if n > order {
                return Err(Error::InvalidSeries("coefficient index exceeds the order"));
            }
            if seen[n] {
                return Err(Error::InvalidSeries("duplicate coefficient index"));
            }
            seen[n] = true;
            if !is_finite(c) {
                return Err(Error::InvalidSeries("coefficients must be finite"));
            }
            if form == SignForm::NegativeCoefficients && (c.im != 0.0 || c.re < 0.0) {
                return Err(Error::InvalidSeries(
                    "negative-form coefficients must be real and non-negative",
                ));
            }
            s.coeffs[n - 2] = c;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn form(&self) -> SignForm {
        self.form
    }

    /// Stored coefficient `a_n` (a magnitude in negative form); zero outside `2..=order`.
    pub fn coeff(&self, n: usize) -> Complex64 {
        if n >= 2 && n <= self.order {
            self.coeffs[n - 2]
        } else {
            Complex64::zero()
        }
    }

    /// Coefficient of `z^n` in the represented function, sign applied.
    pub fn signed_coeff(&self, n: usize) -> Complex64 {
        match n {
            1 => Complex64::new(1.0, 0.0),
            _ => match self.form {
                SignForm::General => self.coeff(n),
                SignForm::NegativeCoefficients => -self.coeff(n),
            },
        }
    }

    /// Iterator over `(n, a_n)` for `n = 2..=order`, stored values.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.coeffs.iter().enumerate().map(|(i, &c)| (i + 2, c))
    }

    /// Largest index carrying a non-zero coefficient (1 for `f = z`).
    pub fn effective_order(&self) -> usize {
        self.terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, _)| n)
            .last()
            .unwrap_or(1)
    }

    /// Same coefficients, order changed (zero-padded or truncated).
    pub fn with_order(&self, order: usize) -> Result<Self> {
        let mut s = Self::identity(order, self.form)?;
        for (slot, (_, c)) in s.coeffs.iter_mut().zip(self.terms()) {
            *slot = c;
        }
        Ok(s)
    }

    /// Multiplies every stored coefficient by `c`; the `z` term is untouched.
    pub fn scale_coefficients(&self, c: f64) -> Result<Self> {
        if !c.is_finite() || (self.form == SignForm::NegativeCoefficients && c < 0.0) {
            return Err(Error::Domain(
                "scale factor must be finite (and >= 0 in negative form)",
            ));
        }
        Ok(self.map_coeffs(|_, a| a * c))
    }

    /// Applies `f(n, a_n)` to every stored coefficient, keeping the form.
    pub(crate) fn map_coeffs<F>(&self, mut f: F) -> Self
    where
        F: FnMut(usize, Complex64) -> Complex64,
    {
        let coeffs = self.terms().map(|(n, c)| f(n, c)).collect();
        Self {
            order: self.order,
            form: self.form,
            coeffs,
        }
    }

    /// The same function rewritten in general form (signs folded in).
    pub fn to_general(&self) -> Self {
        let coeffs = (2..=self.order).map(|n| self.signed_coeff(n)).collect();
        Self {
            order: self.order,
            form: SignForm::General,
            coeffs,
        }
    }

    /// Dense polynomial `0 + 1 z + s_2 z^2 + ...` with signs applied.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut c = Vec::with_capacity(self.order + 1);
        c.push(Complex64::zero());
        c.extend((1..=self.order).map(|n| self.signed_coeff(n)));
        Polynomial::new(c)
    }

    /// `f(z) / z = 1 + s_2 z + ... + s_N z^{N-1}`, the removable-singularity-free quotient.
    pub fn quotient_by_z(&self) -> Polynomial {
        Polynomial::new((1..=self.order).map(|n| self.signed_coeff(n)).collect())
    }

    /// Evaluates `f(z)` by Horner's scheme; `z` must lie in the open unit disk.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        check_open_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    #[inline]
    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let inner = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * z + self.sign(c));
        z * (inner * z + 1.0)
    }

    #[inline]
    fn sign(&self, c: Complex64) -> Complex64 {
        match self.form {
            SignForm::General => c,
            SignForm::NegativeCoefficients => -c,
        }
    }

    /// `f'(z) = 1 + sum n s_n z^{n-1}` as a dense polynomial of degree `N - 1`.
    pub fn derivative(&self) -> Polynomial {
        self.to_polynomial().derivative()
    }

    /// Hadamard product: coefficient `n` of the result is the product of the
    /// signed coefficients; the result order is the smaller of the two and the
    /// result is always in general form.
    pub fn hadamard(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (2..=order)
            .map(|n| self.signed_coeff(n) * other.signed_coeff(n))
            .collect();
        Self {
            order,
            form: SignForm::General,
            coeffs,
        }
    }

    /// `f(t z)` as a dense polynomial: coefficient `n` is `s_n t^n`, linear term `t`.
    pub fn scale_substitute(&self, t: Complex64) -> Result<Polynomial> {
        if !is_finite(t) || t.norm() > 1.0 {
            return Err(Error::Domain("substitution factor must satisfy |t| <= 1"));
        }
        let mut c = Vec::with_capacity(self.order + 1);
        c.push(Complex64::zero());
        let mut tn = Complex64::new(1.0, 0.0);
        for n in 1..=self.order {
            tn *= t;
            c.push(self.signed_coeff(n) * tn);
        }
        Ok(Polynomial::new(c))
    }
}

/// Dense complex polynomial `c_0 + c_1 z + ... + c_d z^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or_else(Complex64::zero)
    }

    /// Evaluates at a point of the open unit disk.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        check_open_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    #[inline]
    pub fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    pub fn derivative(&self) -> Polynomial {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * j as f64)
            .collect();
        Polynomial::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn identity_evaluates_to_argument() {
        let f = TruncatedSeries::identity(4, SignForm::General).unwrap();
        assert_eq!(f.evaluate(c(0.5)).unwrap(), c(0.5));
    }

    #[test]
    fn negative_form_substitution() {
        let f = TruncatedSeries::negative(2, &[0.5]).unwrap();
        assert_eq!(f.evaluate(c(0.5)).unwrap(), c(0.375));
    }

    #[test]
    fn evaluation_near_boundary() {
        // -0.99 + 0.5 * 0.9801
        let f = TruncatedSeries::general(2, &[c(0.5)]).unwrap();
        let v = f.evaluate(c(-0.99)).unwrap();
        assert!((v.re - (-0.49995)).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn evaluate_rejects_closed_disk() {
        let f = TruncatedSeries::identity(3, SignForm::General).unwrap();
        assert!(matches!(f.evaluate(c(1.0)), Err(Error::Domain(_))));
        assert!(matches!(
            f.evaluate(Complex64::new(0.8, 0.6)),
            Err(Error::Domain(_))
        ));
        assert!(f.evaluate(Complex64::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn derivative_term_by_term() {
        let f = TruncatedSeries::identity(1, SignForm::General).unwrap();
        assert_eq!(f.derivative().coeffs(), &[c(1.0)]);

        let f = TruncatedSeries::negative(2, &[0.5]).unwrap();
        assert_eq!(f.derivative().coeffs(), &[c(1.0), c(-1.0)]);

        let f = TruncatedSeries::general(3, &[c(0.0), c(1.0 / 3.0)]).unwrap();
        let d = f.derivative();
        assert_eq!(d.coeff(0), c(1.0));
        assert_eq!(d.coeff(1), c(0.0));
        assert!((d.coeff(2).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hadamard_with_geometric_kernel_is_identity() {
        let f = TruncatedSeries::general(4, &[c(0.3), Complex64::new(0.1, -0.2), c(2.0)]).unwrap();
        let g = TruncatedSeries::general(6, &[c(1.0); 5]).unwrap();
        let h = f.hadamard(&g);
        assert_eq!(h.order(), 4);
        assert_eq!(h, f);
    }

    #[test]
    fn hadamard_of_negative_forms_multiplies_signed_coefficients() {
        let f = TruncatedSeries::negative(2, &[0.5]).unwrap();
        let h = f.hadamard(&f);
        assert_eq!(h.form(), SignForm::General);
        assert_eq!(h.coeff(2), c(0.25));
    }

    #[test]
    fn scale_substitute_cases() {
        let f = TruncatedSeries::negative(2, &[0.5]).unwrap();
        let zero = f.scale_substitute(c(0.0)).unwrap();
        assert!(zero.coeffs().iter().all(|c| c.is_zero()));

        let same = f.scale_substitute(c(1.0)).unwrap();
        assert_eq!(same, f.to_polynomial());

        let flipped = f.scale_substitute(c(-1.0)).unwrap();
        assert_eq!(flipped.coeffs(), &[c(0.0), c(-1.0), c(-0.5)]);

        assert!(f.scale_substitute(c(1.5)).is_err());
    }

    #[test]
    fn strict_term_parsing() {
        let ok = TruncatedSeries::from_terms(SignForm::General, 3, [(3, c(0.2))]).unwrap();
        assert_eq!(ok.coeff(2), c(0.0));
        assert_eq!(ok.coeff(3), c(0.2));
        for bad in [
            alloc::vec![(1usize, c(0.1))],
            alloc::vec![(4, c(0.1))],
            alloc::vec![(2, c(0.1)), (2, c(0.2))],
            alloc::vec![(2, c(f64::INFINITY))],
        ] {
            assert!(TruncatedSeries::from_terms(SignForm::General, 3, bad).is_err());
        }
        assert!(
            TruncatedSeries::from_terms(SignForm::NegativeCoefficients, 3, [(2, c(-0.1))]).is_err()
        );
        assert!(
            TruncatedSeries::from_terms(
                SignForm::NegativeCoefficients,
                3,
                [(2, Complex64::new(0.1, 0.1))]
            )
            .is_err()
        );
    }

    #[test]
    fn zero_order_rejected() {
        assert!(TruncatedSeries::identity(0, SignForm::General).is_err());
    }
}
