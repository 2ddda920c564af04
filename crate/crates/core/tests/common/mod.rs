#![allow(dead_code)]

use gft_core::{ClassParams, Complex64, OperatorParams};
use rand::Rng;

pub fn class(lambda: f64, mu: f64, eta: u32, k: f64, gamma: f64, t: Complex64) -> ClassParams {
    ClassParams::new(OperatorParams::new(lambda, mu, eta).unwrap(), k, gamma, t).unwrap()
}

/// eta = 0, t = 0, k = 0, gamma = 0.
pub fn set_a() -> ClassParams {
    class(1.0, 0.0, 0, 0.0, 0.0, Complex64::new(0.0, 0.0))
}

/// eta = 1, lambda = 1, mu = 0, t = -1, k = 1, gamma = 0.25.
pub fn set_b() -> ClassParams {
    class(1.0, 0.0, 1, 1.0, 0.25, Complex64::new(-1.0, 0.0))
}

/// eta = 2, lambda = 0.75, mu = 0.25, t = 0.5, k = 0.5, gamma = 0.5.
pub fn set_c() -> ClassParams {
    class(0.75, 0.25, 2, 0.5, 0.5, Complex64::new(0.5, 0.0))
}

pub fn reference_sets() -> [(&'static str, ClassParams); 3] {
    [("A", set_a()), ("B", set_b()), ("C", set_c())]
}

/// Random valid parameters with real t in (-1, 1).
pub fn random_real_params<R: Rng>(rng: &mut R) -> ClassParams {
    let lambda = rng.random_range(0.0..2.0);
    let mu = rng.random_range(0.0..=lambda);
    let eta = rng.random_range(0..=4);
    let k = rng.random_range(0.0..3.0);
    let gamma = rng.random_range(0.0..0.99);
    let t = rng.random_range(-1.0..1.0);
    class(lambda, mu, eta, k, gamma, Complex64::new(t, 0.0))
}

/// Plain power-sum evaluation of `sum c_j z^j`, independent of Horner.
pub fn power_sum(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| c * z.powu(j as u32))
        .sum()
}
