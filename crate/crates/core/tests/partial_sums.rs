mod common;

use common::{random_real_params, reference_sets, set_a};
use gft_core::partial_sums::{
    extremal_partial, partial_sum, sharpness_ray, theorem_bounds, verify_ratio_bounds,
};
use gft_core::verifier::{RatioProbe, scan};
use gft_core::{ClassParams, Complex64, GridSpec, TruncatedSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// General-form series with random arguments and `sum delta_n |a_n| = fill`.
fn random_hypothesis_member(
    p: &ClassParams,
    order: usize,
    fill: f64,
    rng: &mut ChaCha8Rng,
) -> TruncatedSeries {
    let shares: Vec<f64> = (2..=order)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let total: f64 = shares.iter().sum();
    let coeffs: Vec<Complex64> = (2..=order)
        .zip(&shares)
        .map(|(n, s)| {
            let modulus = fill * s / total * p.budget() / p.weight(n);
            Complex64::from_polar(modulus, rng.random_range(-3.2..3.2))
        })
        .collect();
    TruncatedSeries::general(order, &coeffs).unwrap()
}

#[test]
fn set_a_bounds_for_m1() {
    let b = theorem_bounds(&set_a(), 1, 32).unwrap();
    assert_eq!(b.as_array(), [0.5, 2.0 / 3.0, 0.0, 0.5]);
    assert!(b.proven());
}

#[test]
fn partial_sum_truncates() {
    let f = TruncatedSeries::negative(5, &[0.1, 0.2, 0.3, 0.4]).unwrap();
    let f2 = partial_sum(&f, 2).unwrap();
    assert_eq!(f2.order(), 2);
    assert_eq!(f2.coeff(2), f.coeff(2));
    assert_eq!(partial_sum(&f, 1).unwrap().order(), 1);
    assert_eq!(partial_sum(&f, 9).unwrap(), f);
    assert!(partial_sum(&f, 0).is_err());
}

#[test]
fn random_members_satisfy_all_four_bounds() {
    let grid = GridSpec::log_spaced(16, 0.01, 0.99, 96).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut params: Vec<_> = reference_sets().iter().map(|(_, p)| *p).collect();
    params.extend((0..6).map(|_| random_real_params(&mut rng)));
    for p in &params {
        for m in [1, 2, 4] {
            let b = theorem_bounds(p, m, 24).unwrap();
            for _ in 0..8 {
                let fill = rng.random_range(0.0..1.0);
                let f = random_hypothesis_member(p, 12, fill, &mut rng);
                let reports = verify_ratio_bounds(p, &f, m, &grid).unwrap();
                for (i, r) in reports.iter().enumerate() {
                    let proven = if i < 2 {
                        b.value_ratios_proven()
                    } else {
                        b.derivative_ratios_proven()
                    };
                    if proven {
                        assert!(r.pass, "{p:?} m = {m}: {r:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn extremal_attains_value_bounds_on_the_sharpness_ray() {
    for (_, p) in reference_sets() {
        for m in [1, 2, 4] {
            let f = extremal_partial(&p, m).unwrap();
            let b = theorem_bounds(&p, m, 16).unwrap();
            let fm = partial_sum(&f, m).unwrap();
            let grid = GridSpec::new(vec![0.999_999], 8, vec![sharpness_ray(m)]).unwrap();
            let probe = RatioProbe::of_series(&f, &fm);
            let e = scan(&grid, &probe).unwrap();
            assert!(
                e.value - b.bound_f_over_fm <= 1e-3,
                "{m}: {} vs {}",
                e.value,
                b.bound_f_over_fm
            );
            let probe = RatioProbe::of_series(&fm, &f);
            let e = scan(&grid, &probe).unwrap();
            assert!(e.value - b.bound_fm_over_f <= 1e-3);
        }
    }
}

#[test]
fn hypothesis_violation_is_reported() {
    let p = set_a();
    let f = extremal_partial(&p, 1)
        .unwrap()
        .scale_coefficients(1.01)
        .unwrap();
    let grid = GridSpec::log_spaced(4, 0.1, 0.9, 16).unwrap();
    assert!(verify_ratio_bounds(&p, &f, 1, &grid).is_err());
}
