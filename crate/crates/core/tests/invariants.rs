mod common;

use common::class;
use gft_core::conic::lemma1_check;
use gft_core::{ClassParams, Complex64, ConicSpec, TruncatedSeries};
use proptest::prelude::*;

fn real_params() -> impl Strategy<Value = ClassParams> {
    (
        0.0f64..2.0,
        0.0f64..1.0,
        0u32..5,
        0.0f64..3.0,
        0.0f64..0.99,
        -1.0f64..1.0,
    )
        .prop_map(|(l, mu_frac, eta, k, g, t)| {
            class(l, l * mu_frac, eta, k, g, Complex64::new(t, 0.0))
        })
}

fn any_params() -> impl Strategy<Value = ClassParams> {
    (real_params(), 0.0f64..1.0, -3.2f64..3.2).prop_map(|(p, r, a)| {
        let t = Complex64::from_polar(r, a);
        class(
            p.op().lambda(),
            p.op().mu(),
            p.op().eta(),
            p.k(),
            p.gamma(),
            t,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn weights_dominate_linear_floor(p in any_params(), n in 2usize..40) {
        let floor = n as f64 * p.budget() * p.op().phi(n).unwrap();
        prop_assert!(p.weight(n) >= floor * (1.0 - 1e-12));
    }

    #[test]
    fn membership_is_closed_under_shrinking(
        p in real_params(),
        mags in proptest::collection::vec(0.0f64..0.2, 1..12),
        s in 0.0f64..1.0,
    ) {
        let f = TruncatedSeries::negative(mags.len() + 1, &mags).unwrap();
        let v = p.is_member(&f).unwrap();
        let shrunk = p.is_member(&f.scale_coefficients(s).unwrap()).unwrap();
        prop_assert!(shrunk.sum <= v.sum);
        prop_assert!(!v.member || shrunk.member);
    }

    #[test]
    fn coefficient_bound_is_the_membership_edge(p in real_params(), n in 2usize..20) {
        let f = p.extremal_function(n).unwrap();
        let v = p.is_member(&f).unwrap();
        prop_assert!(v.member);
        prop_assert!((v.sum - v.budget).abs() <= 1e-12);
        prop_assert!(!p.is_member(&f.scale_coefficients(1.0 + 1e-9).unwrap()).unwrap().member);
    }

    #[test]
    fn conic_shrinks_as_k_and_gamma_grow(
        k in 0.0f64..3.0, dk in 0.0f64..1.0, g in 0.0f64..0.9, dg in 0.0f64..0.09,
        re in -1.0f64..4.0, im in -3.0f64..3.0,
    ) {
        let w = Complex64::new(re, im);
        let big = ConicSpec::new(k, g).unwrap();
        let small = ConicSpec::new(k + dk, g + dg).unwrap();
        prop_assert!(!small.contains(w) || big.contains(w));
    }

    #[test]
    fn lemma1_agrees(re in -10.0f64..10.0, im in -10.0f64..10.0, alpha in -2.0f64..2.0) {
        prop_assert!(lemma1_check(Complex64::new(re, im), alpha).agrees());
    }
}
