mod common;

use common::*;
use plmc_core::algos::exact_maxcut;
use plmc_core::plg::hardness_ratio;
use plmc_core::reduction::*;
use plmc_core::{Error, Multigraph};

#[test]
fn choose_alpha_examples() {
    let (a, pad) = choose_alpha(8, 2.0).unwrap();
    assert!((a - libm::log(72.0)).abs() < 1e-12);
    assert_eq!(pad, 0);
    assert_eq!(choose_alpha(5, 2.0).unwrap().1, 0);
    assert_eq!(choose_alpha(6, 2.0).unwrap().1, 0);
    assert_eq!(choose_alpha_with_k(6, 2.0, 10).unwrap().1, 1);
    assert!(choose_alpha_with_k(6, 2.0, 9).is_err());
    assert!(choose_alpha(3, 2.0).is_err());
    for n in (4..400).step_by(2) {
        for beta in [0.5, 1.0, 2.1, 2.5, 3.0] {
            choose_alpha(n, beta).unwrap();
        }
    }
}

fn check_identity(g3: &Multigraph, beta: f64, pads: Option<u64>) {
    let opts = EmbedOptions {
        degree3_count: pads.map(|p| g3.vertex_count() as u64 + 4 * p),
        ..EmbedOptions::default()
    };
    let e = embed_with(g3, beta, &opts).unwrap();
    let padded = pad_with_k4(g3, e.plan.pad_k4_count).unwrap();
    let host_opt = exact_maxcut(&e.host).unwrap().value;
    let base_opt = exact_maxcut(&padded).unwrap().value;
    assert_eq!(host_opt, base_opt + e.report.offset, "beta {beta}");
    assert!(e.report.histogram_deviation <= 1);
    assert_eq!(e.report.histogram_deviation == 1, e.plan.parity_deviation);

    let mut cut = optimal_gadget_cut(&e.plan, &e.host).unwrap();
    let g3cut = exact_maxcut(&padded).unwrap().cut;
    for v in 0..padded.vertex_count() {
        cut.set(v, g3cut.side(v));
    }
    assert_eq!(e.host.cut_value(&cut).unwrap(), host_opt);
}

#[test]
fn end_to_end_identity() {
    for g3 in [complete(4), k33(), prism()] {
        for beta in [2.5, 0.5, 2.1, 3.0, 1.0] {
            check_identity(&g3, beta, None);
        }
    }
    check_identity(&complete(4), 2.5, Some(1));
}

#[test]
fn k4_multipath_host() {
    let e = embed(&complete(4), 2.5).unwrap();
    assert_eq!(e.plan.strategy, "multipath");
    assert_eq!(e.report.offset, e.report.gadget_edge_total);
    assert_eq!(e.report.host_edge_total, 6 + e.report.gadget_edge_total);
    assert!(e.plan.critical_set.is_empty());
    assert!(e.plan.entries.iter().all(|p| p.case.starts_with("multipath")));
}

#[test]
fn k4_wheel_host() {
    let e = embed(&complete(4), 0.5).unwrap();
    assert_eq!(e.plan.strategy, "wheel");
    let opt_sum: u64 = e.plan.gadgets.iter().map(|g| g.certification.value).sum();
    assert_eq!(e.report.offset, opt_sum);
    let j = &e.plan.critical_set;
    assert!(j.iter().all(|&i| i >= 5 && i % 2 == 1));
    assert_eq!(e.plan.critical_matching.len(), j.len() / 2);
    assert_eq!(e.plan.leftover.is_some(), j.len() % 2 == 1);
    if let Some(ic) = e.plan.leftover {
        assert_eq!(ic, *j.last().unwrap());
    }
}

#[test]
fn rejects_non_cubic_input() {
    assert!(matches!(embed(&cycle(5), 2.5), Err(Error::Contract(_))));
    let doubled = Multigraph::from_edges(4, [(0, 1, 2), (2, 3, 2), (0, 2, 1), (1, 3, 1)]).unwrap();
    assert!(matches!(embed(&doubled, 2.5), Err(Error::Contract(_))));
}

#[test]
fn forced_multipath_at_small_beta_is_infeasible() {
    let opts = EmbedOptions { strategy: EmbedStrategy::Multipath, ..EmbedOptions::default() };
    assert!(matches!(embed_with(&complete(4), 0.5, &opts), Err(Error::Infeasible(_))));
}

#[test]
fn projected_offset_matches_embedding() {
    let ladder = circular_ladder(52);
    for beta in [2.5, 3.0] {
        let e = embed(&ladder, beta).unwrap();
        assert_eq!(projected_offset(1, beta).unwrap(), e.report.offset as u128);
    }
}

#[test]
fn lifted_ratio_approaches_hardness_ratio() {
    let n = 1_000_000;
    let t = decision_thresholds(n, 1e-6).unwrap();
    let offset = projected_offset(n, 3.0).unwrap() as u64;
    let (yes, no) = lift_thresholds(&t, offset);
    let h = hardness_ratio(3.0).unwrap();
    assert!(((yes / no) - h).abs() / h < 1e-4, "{} vs {h}", yes / no);
}
