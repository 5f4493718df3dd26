//! Acceptance suite: one PASS/FAIL line per criterion. Set
//! `ACCEPTANCE_STRICT` to exit non-zero when any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use plmc_core::algos::*;
use plmc_core::generator::{generate, target_degree_multiset};
use plmc_core::plg::*;
use plmc_core::reduction::*;
use plmc_core::rng::SeededRng;
use plmc_core::{Cut, Error, Multigraph};

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(elapsed: Duration, limit: Duration, detail: String) -> Outcome {
    check(elapsed <= limit, format!("{detail}; {:.2}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs()))
}

fn interval_lemma() -> Outcome {
    let start = Instant::now();
    let mut rng = SeededRng::new(2024);
    let betas = [0.5, 1.0, 1.5, 2.0, 2.5, 3.0];
    let mut inside = 0;
    for _ in 0..200 {
        let alpha = 4.0 + 10.0 * rng.unit_f64();
        let beta = betas[rng.below(6) as usize];
        let p = PowerLawParams::new(alpha, beta).map_err(|e| e.to_string())?;
        let d = p.max_degree();
        let x = 1 + rng.below(d);
        let y = 1 + rng.below(d);
        let (a, b) = (x.min(y), x.max(y));
        let s = interval_sums(&p, a, b).map_err(|e| e.to_string())?;
        let sb = interval_size_bounds(&p, a, b).map_err(|e| e.to_string())?;
        let vb = interval_volume_bounds(&p, a, b).map_err(|e| e.to_string())?;
        if sb.contains(s.size as f64) && vb.contains(s.volume as f64) {
            inside += 1;
        }
    }
    let detail = format!("{inside}/200 tuples inside both envelopes");
    if inside != 200 {
        return Err(detail);
    }
    within(start.elapsed(), Duration::from_secs(10), detail)
}

fn generator_fidelity() -> Outcome {
    let p = PowerLawParams::new(std::f64::consts::LN_10 * 2.0, 2.0).map_err(|e| e.to_string())?;
    let target = target_degree_multiset(&p);
    let mut exact = 0;
    let mut flagged = 0;
    for seed in 0..10 {
        let (g, r) = generate(&p, seed).map_err(|e| e.to_string())?;
        let mut hist = g.degree_histogram();
        if let Some(v) = r.adjusted_vertex {
            flagged += 1;
            let d = g.degree(v);
            *hist.entry(d).or_default() -= 1;
            *hist.entry(d + 1).or_default() += 1;
            hist.retain(|_, c| *c > 0);
        }
        let same = hist.len() == target.len() && hist.iter().all(|(d, c)| target.get(d) == Some(&(*c as u128)));
        if same {
            exact += 1;
        }
    }
    check(exact == 10, format!("{exact}/10 histograms equal the target ({flagged} parity-flagged)"))
}

fn size_estimates() -> Outcome {
    let alpha = 12.0;
    let mut parts = Vec::new();
    let mut ok = true;
    for beta in [2.5, 3.0] {
        let p = PowerLawParams::new(alpha, beta).map_err(|e| e.to_string())?;
        let zn = zeta(beta, 1e-12).map_err(|e| e.to_string())?;
        let zm = zeta(beta - 1.0, 1e-12).map_err(|e| e.to_string())?;
        let e_a = alpha.exp();
        let mut lo_m = f64::INFINITY;
        let mut hi_m = f64::NEG_INFINITY;
        let mut node_ratio = 0.0;
        for seed in 0..5 {
            let (g, _) = generate(&p, seed).map_err(|e| e.to_string())?;
            node_ratio = g.vertex_count() as f64 / (zn * e_a);
            let m = g.total_multiplicity() as f64 / (0.5 * zm * e_a);
            lo_m = lo_m.min(m);
            hi_m = hi_m.max(m);
        }
        let node_ok = (0.98..=1.02).contains(&node_ratio);
        let edge_ok = lo_m >= 0.95 && hi_m <= 1.05;
        ok &= node_ok && edge_ok;
        parts.push(format!(
            "beta={beta}: |V| ratio {node_ratio:.5} [{}], |E| ratio {lo_m:.5}..{hi_m:.5} [{}]",
            if node_ok { "ok" } else { "out" },
            if edge_ok { "ok" } else { "out" }
        ));
    }
    check(ok, parts.join("; "))
}

/// Thirty graphs on at most 16 vertices.
fn oracle_fixtures() -> Vec<(String, Multigraph)> {
    let mut v: Vec<(String, Multigraph)> = vec![
        ("K4".into(), complete(4)),
        ("C5".into(), cycle(5)),
        ("Petersen".into(), petersen()),
        ("K33".into(), k33()),
        ("prism".into(), prism()),
        ("K6".into(), complete(6)),
        ("P6".into(), path(6)),
        ("star7".into(), star(7)),
        ("C9".into(), cycle(9)),
        ("ladder5".into(), circular_ladder(5)),
    ];
    for s in 0..8 {
        let n = 8 + (s as usize % 9);
        v.push((format!("G({n},0.45)#{s}"), gnp(n, 0.45, 300 + s)));
    }
    for (i, (a, b)) in [(2.2f64, 2.0), (2.0, 1.5), (2.3, 2.5), (1.8, 1.0), (2.1, 3.0), (2.4, 2.2)].iter().enumerate() {
        let p = PowerLawParams::new(*a, *b).unwrap();
        let (g, _) = generate(&p, i as u64).unwrap();
        assert!(g.vertex_count() <= 16, "PLG fixture too large");
        v.push((format!("PLG({a},{b})"), g));
    }
    v.push(("multipath(4,4)".into(), build_multipath(4, 4).unwrap().graph));
    v.push(("wheel(4,5)".into(), build_wheel(4, 5).unwrap().graph));
    v.push(("joined(5,3,7,3)".into(), build_joined_wheels(5, 3, 7, 3).unwrap().graph));
    v.push(("leftover(5,3)".into(), build_leftover_wheel(5, 3).unwrap().graph));
    v.push(("multipath(5,3)".into(), build_multipath(5, 3).unwrap().graph));
    v.push(("matching(8)".into(), build_matching(8).unwrap().graph));
    v
}

fn oracle_dominance() -> Outcome {
    let start = Instant::now();
    let fixtures = oracle_fixtures();
    let nominal = PowerLawParams::new(3.0, 1.5).unwrap();
    let mut failures = Vec::new();
    for (name, g) in &fixtures {
        let opt = exact_maxcut(g).map_err(|e| e.to_string())?.value;
        let m_eff = g.total_multiplicity() - g.self_loop_total();
        let runs = [
            greedy_cut(g),
            local_search(g, Cut::new(g.vertex_count())),
            dense_ptas(g, 0.25, 1),
            split_ptas(g, &nominal, 0.5, 1),
            gw_sdp(g, 1, 100),
            beta_gt2_algorithm(g, 1, 100),
        ];
        for r in runs {
            let r = r.map_err(|e| e.to_string())?;
            if r.value > opt || r.value != g.cut_value(&r.cut).unwrap() {
                failures.push(format!("{name}/{}", r.algorithm));
            }
            if r.algorithm == Algorithm::Greedy && 2 * r.value < m_eff {
                failures.push(format!("{name}/greedy-half"));
            }
            if r.algorithm == Algorithm::Local && !is_one_flip_optimal(g, &r.cut) {
                failures.push(format!("{name}/local-1flip"));
            }
        }
    }
    let detail = format!("{} fixtures, {} violations {:?}", fixtures.len(), failures.len(), failures);
    if !failures.is_empty() || fixtures.len() != 30 {
        return Err(detail);
    }
    within(start.elapsed(), Duration::from_secs(120), detail)
}

fn dense_ratio() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut good = 0;
    for s in 0..10 {
        let g = gnp(16, 0.5, 500 + s);
        let opt = exact_maxcut(&g).map_err(|e| e.to_string())?.value;
        let v = dense_ptas(&g, 0.25, s).map_err(|e| e.to_string())?.value;
        let r = v as f64 / opt as f64;
        worst = worst.min(r);
        if r >= 0.75 {
            good += 1;
        }
    }
    check(good == 10, format!("{good}/10 at >= 0.75 of exact; worst ratio {worst:.4}"))
}

fn gw_quality() -> Outcome {
    let mut good = 0;
    let mut ub_ok = 0;
    let mut worst = f64::INFINITY;
    for s in 0..20u64 {
        let n = 8 + (s as usize % 7);
        let g = random_multigraph(n, 3 * n, 2, 700 + s);
        let opt = exact_maxcut(&g).map_err(|e| e.to_string())?.value;
        let r = gw_sdp(&g, s, 100).map_err(|e| e.to_string())?;
        let ratio = r.value as f64 / opt.max(1) as f64;
        worst = worst.min(ratio);
        if ratio >= 0.878 {
            good += 1;
        }
        if r.upper_bound().is_some_and(|u| u + 1e-9 >= opt as f64) {
            ub_ok += 1;
        }
    }
    check(
        good >= 19 && ub_ok == 20,
        format!("{good}/20 at >= 0.878 of exact (worst {worst:.4}); UB >= exact on {ub_ok}/20"),
    )
}

fn beta_gt2_preprocessing() -> Outcome {
    let mut leaf_ok = 0;
    let fixtures = oracle_fixtures();
    for (_, g) in &fixtures {
        let r = beta_gt2_algorithm(g, 3, 50).map_err(|e| e.to_string())?;
        if leaf_edges_cut(g, &r.cut) {
            leaf_ok += 1;
        }
    }
    let p = PowerLawParams::new(6.0, 2.5).unwrap();
    let mut paired = 0;
    let mut pairs = Vec::new();
    for seed in 0..5 {
        let (g, _) = generate(&p, seed).map_err(|e| e.to_string())?;
        let b = beta_gt2_algorithm(&g, seed, DEFAULT_RESTARTS).map_err(|e| e.to_string())?;
        let w = gw_sdp(&g, seed, DEFAULT_RESTARTS).map_err(|e| e.to_string())?;
        if !leaf_edges_cut(&g, &b.cut) {
            leaf_ok = 0;
        }
        if b.value >= w.value {
            paired += 1;
        }
        pairs.push(format!("{}/{}", b.value, w.value));
    }
    check(
        leaf_ok == fixtures.len() && paired == 5,
        format!(
            "leaf edges cut on {leaf_ok}/{} fixtures; beta-gt2 >= gw on {paired}/5 ({})",
            fixtures.len(),
            pairs.join(" ")
        ),
    )
}

fn gadget_lemma() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for beta in [2.1, 2.5, 3.0] {
        let e = embed(&complete(4), beta).map_err(|e| e.to_string())?;
        let cut = optimal_gadget_cut(&e.plan, &e.host).map_err(|e| e.to_string())?;
        let value = e.host.cut_value(&cut).unwrap();
        let mut brute = 0;
        for rec in &e.plan.gadgets {
            if rec.vertex_count <= 20 {
                let ids: Vec<usize> = (rec.first_vertex..rec.first_vertex + rec.vertex_count).collect();
                let (sub, _) = e.host.induced_subgraph(&ids).unwrap();
                ok &= exact_maxcut(&sub).map_err(|e| e.to_string())?.value == rec.edge_total;
                brute += 1;
            }
        }
        ok &= value == e.report.gadget_edge_total;
        notes.push(format!(
            "beta={beta}: cut {value} = total {} ({} gadgets, {brute} brute-forced)",
            e.report.gadget_edge_total,
            e.plan.gadgets.len()
        ));
    }
    let joined = build_joined_wheels(5, 3, 7, 3).unwrap();
    let left = build_leftover_wheel(5, 3).unwrap();
    let jv = exact_maxcut(&joined.graph).unwrap().value;
    let lv = exact_maxcut(&left.graph).unwrap().value;
    ok &= jv == 13 && joined.opt_value == 13 && lv == 6 && left.opt_value == 6;
    notes.push(format!("joined(5,3,7,3) -> {jv}, leftover(5,3) -> {lv}"));
    check(ok, notes.join("; "))
}

fn reduction_identity() -> Outcome {
    let mut done = 0;
    let mut bad = Vec::new();
    for (name, g3) in [("K4", complete(4)), ("K33", k33()), ("prism", prism())] {
        for beta in [2.5, 0.5] {
            let e = embed(&g3, beta).map_err(|e| e.to_string())?;
            let padded = pad_with_k4(&g3, e.plan.pad_k4_count).unwrap();
            let host = exact_maxcut(&e.host).map_err(|e| e.to_string())?.value;
            let base = exact_maxcut(&padded).map_err(|e| e.to_string())?.value;
            if host == base + e.report.offset {
                done += 1;
            } else {
                bad.push(format!("{name}@{beta}: {host} != {base} + {}", e.report.offset));
            }
        }
    }
    check(bad.is_empty(), format!("{done}/6 identities hold {bad:?}"))
}

fn formulas() -> Outcome {
    let h = hardness_ratio(3.0).map_err(|e| e.to_string())?;
    let g = gw_ratio_bound(3.0, GwBoundInputs::new(1.0).unwrap()).map_err(|e| e.to_string())?;
    let t = tau(0.25).map_err(|e| e.to_string())?;
    let sp = split_params(0.25, 1.5).map_err(|e| e.to_string())?;
    let ok = (h - 1.000434).abs() <= 1e-6
        && (g - 0.9526).abs() <= 5e-4
        && t == 20.0
        && (sp.x - 1.0 / 1600.0).abs() < 1e-15
        && (sp.eps_prime - 8.218e-6).abs() <= 1e-9;
    check(
        ok,
        format!("hardness(3)={h:.7} gw(3,1)={g:.5} tau(0.25)={t} x={} eps'={:.4e}", sp.x, sp.eps_prime),
    )
}

fn core_strength_trend() -> Outcome {
    let mut means = Vec::new();
    let mut notes = Vec::new();
    for alpha in [8.0, 10.0, 12.0] {
        let p = PowerLawParams::new(alpha, 1.0).unwrap();
        let mut vals = Vec::new();
        for seed in 0..3 {
            match generate(&p, seed) {
                Ok((g, _)) => vals.push(g.core_strength().map_err(|e| e.to_string())?),
                Err(e @ Error::CopyBudget { .. }) => {
                    notes.push(format!("alpha={alpha}: {e}"));
                    break;
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        if vals.len() == 3 {
            let m = vals.iter().sum::<f64>() / 3.0;
            notes.push(format!("alpha={alpha}: mean {m:.4} (bound {:.4})", core_strength_bound(alpha)));
            means.push(Some(m));
        } else {
            means.push(None);
        }
    }
    let all: Option<Vec<f64>> = means.into_iter().collect();
    let ok = all.is_some_and(|m| m.windows(2).all(|w| w[1] < w[0]) && m.iter().all(|&x| x < 1.0));
    check(ok, notes.join("; "))
}

fn functional_trend() -> Outcome {
    let f = FunctionalSpec::sqrt();
    let mut r2 = Vec::new();
    for alpha in [20.0, 40.0, 60.0] {
        let x = functional_x(&f, alpha).map_err(|e| e.to_string())?;
        let r = functional_conditions_check(&f, alpha, x).map_err(|e| e.to_string())?;
        r2.push((alpha, r.ratio1, r.ratio2));
    }
    let ok = r2.windows(2).all(|w| w[1].2 < w[0].2);
    let detail = r2
        .iter()
        .map(|(a, q1, q2)| format!("alpha={a}: ratio1 {q1:.4} ratio2 {q2:.4}"))
        .collect::<Vec<_>>()
        .join("; ");
    check(ok, detail)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("interval-bound lemma", interval_lemma),
        ("generator fidelity", generator_fidelity),
        ("n/m estimates", size_estimates),
        ("oracle dominance", oracle_dominance),
        ("dense PTAS ratio", dense_ratio),
        ("GW quality", gw_quality),
        ("beta>2 preprocessing", beta_gt2_preprocessing),
        ("gadget lemma", gadget_lemma),
        ("reduction identity", reduction_identity),
        ("formula reproduction", formulas),
        ("core-strength trend", core_strength_trend),
        ("functional case", functional_trend),
    ];
    let mut passed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => {
                passed += 1;
                println!("AC{:02} PASS {name}: {d} [{secs:.2}s]", i + 1);
            }
            Err(d) => println!("AC{:02} FAIL {name}: {d} [{secs:.2}s]", i + 1),
        }
    }
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed != criteria.len() && std::env::var_os("ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}
