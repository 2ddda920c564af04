//! Numerical toolkit for the class of `k`-uniformly starlike functions with
//! respect to `t`-symmetric points defined through the multiplier differential
//! operator `D^eta_{lambda,mu}`.
//!
//! * [`series`]: truncated power series `z ± sum a_n z^n`, Horner evaluation,
//!   derivatives, Hadamard products and `f(tz)`.
//! * [`operator`]: `D^eta_{lambda,mu}` in closed and recursive form.
//! * [`class`]: class parameters, the weights `w_n`, the coefficient inequality,
//!   coefficient bounds and extremal functions.
//! * [`conic`]: the conic domain `R_{k,gamma}` and the half-plane equivalences.
//! * [`neighborhood`]: the weighted `alpha`-neighborhood and its inclusion property.
//! * [`partial_sums`]: partial sums and the four ratio bounds.
//! * [`verifier`]: polar-grid infimum estimation over the unit disk.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod class;
pub mod conic;
pub mod error;
pub mod neighborhood;
pub mod operator;
pub mod partial_sums;
pub mod series;
pub mod verifier;

pub use class::{ClassParams, MembershipVerdict, Multipliers};
pub use conic::{ConicKind, ConicSpec};
pub use error::{Error, Result};
pub use neighborhood::{InclusionReport, NeighborhoodSpec};
pub use num_complex::Complex64;
pub use operator::OperatorParams;
pub use partial_sums::PartialSumBounds;
pub use series::{Polynomial, SignForm, TruncatedSeries};
pub use verifier::{GridSpec, PolarPoint, VerificationReport};
