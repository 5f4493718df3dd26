use plmc_core::plg::*;
use proptest::prelude::*;

#[test]
fn node_estimate_tracks_exact_count_for_beta_above_one() {
    for beta in [1.5, 2.0, 2.5, 3.0] {
        for alpha in [10.0, 12.0, 14.0] {
            let p = PowerLawParams::new(alpha, beta).unwrap();
            let exact = interval_size_exact(&p, 1, p.max_degree()).unwrap() as f64;
            let ratio = node_count_estimate(&p) / exact;
            assert!((ratio - 1.0).abs() <= 0.05, "alpha={alpha} beta={beta} ratio={ratio}");
        }
    }
}

#[test]
fn split_threshold_volume_is_small() {
    // Below β ≈ 1.5 the floors in y_i remove a non-vanishing share of the
    // tail volume and the ratio settles near 1.17 instead.
    for (eps, beta) in [(0.25, 1.5), (0.5, 1.5), (1.0, 1.5), (2.0, 1.5), (1.0, 1.6), (0.5, 1.8)] {
        let sp = split_params(eps, beta).unwrap();
        for alpha in [10.0, 12.0, 14.0] {
            let p = PowerLawParams::new(alpha, beta).unwrap();
            let d = p.max_degree();
            let xd = (sp.x * d as f64).floor() as u64;
            let all = interval_sums(&p, 1, d).unwrap();
            let edges = all.volume as f64 / 2.0;
            let low = if xd >= 1 { interval_volume_exact(&p, 1, xd).unwrap() as f64 } else { 0.0 };
            assert!(low <= edges / sp.tau * 1.1, "eps={eps} beta={beta} alpha={alpha}");
        }
    }
}

#[test]
fn functional_ratio_examples() {
    let f = FunctionalSpec::sqrt();
    let a30 = functional_conditions_check(&f, 30.0, functional_x(&f, 30.0).unwrap()).unwrap();
    assert!(a30.ratio1 > 0.0 && a30.ratio1.is_finite());
    assert!(a30.ratio2 > 0.0 && a30.ratio2 < 2.0);
    let whole = functional_conditions_check(&f, 30.0, 1.0).unwrap();
    assert_eq!(whole.ratio2, 2.0);
    assert!(classify_growth(&f, &[20.0, 40.0, 60.0]).unwrap() == GrowthRegime::Sublinear);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn zeta_tolerance_is_consistent(beta in 1.2f64..6.0, k in 4i32..10) {
        let tol = 10f64.powi(-k);
        let a = zeta(beta, tol).unwrap();
        let b = zeta(beta, tol / 10.0).unwrap();
        prop_assert!((a - b).abs() <= tol);
    }

    #[test]
    fn degree_counts_are_monotone(alpha in 1.0f64..12.0, beta in 0.3f64..4.0) {
        let p = PowerLawParams::new(alpha, beta).unwrap();
        let d = p.max_degree().min(5000);
        let mut prev = u128::MAX;
        for i in 1..=d {
            let y = p.degree_count(i).unwrap();
            prop_assert!(y >= 1 && y <= prev);
            prev = y;
        }
    }
}
