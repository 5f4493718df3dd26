use anyhow::bail;
use plmc_core::generator::generate_with_budget;
use plmc_core::plg::{
    classify_growth, core_strength_bound, edge_count_estimate, functional_conditions_check,
    functional_x, gw_ratio_bound, hardness_ratio, interval_size_bounds, interval_sums,
    interval_volume_bounds, node_count_estimate, split_params, tau, FunctionalSpec, GrowthRegime,
    GwBoundInputs, PowerLawParams,
};

use crate::cli::{Analysis, TableOut};
use crate::commands::emit;
use crate::table::{Cell, Table};
use crate::values::{floats, integers};

pub fn analyze(what: Analysis) -> anyhow::Result<()> {
    let (table, out) = match what {
        Analysis::Hardness { beta, out } => (hardness(&beta)?, out),
        Analysis::GwBound {
            beta,
            mu,
            alpha_gw,
            out,
        } => (gw_bound(&beta, &mu, alpha_gw)?, out),
        Analysis::Intervals { alpha, beta, x, out } => (intervals(alpha, beta, x)?, out),
        Analysis::Estimates { alpha, beta, out } => (estimates(&alpha, &beta)?, out),
        Analysis::CoreStrength {
            alpha,
            seeds,
            copy_budget,
            out,
        } => (core_strength(&alpha, seeds.as_deref(), copy_budget)?, out),
        Analysis::Functional { f, alpha, x, out } => (functional(&f, &alpha, x)?, out),
        Analysis::Split { eps, beta, out } => (split(&eps, &beta)?, out),
    };
    write(&table, &out)
}

fn write(table: &Table, out: &TableOut) -> anyhow::Result<()> {
    emit(&table.render(out.format)?, out.out.as_deref())
}

fn hardness(beta: &str) -> anyhow::Result<Table> {
    let mut t = Table::new(&["beta", "hardness_ratio"]);
    for b in floats(beta)? {
        t.push(vec![b.into(), hardness_ratio(b)?.into()]);
    }
    Ok(t)
}

fn gw_bound(beta: &str, mu: &str, alpha_gw: f64) -> anyhow::Result<Table> {
    let mut t = Table::new(&["beta", "mu", "alpha_gw", "gw_ratio_bound"]);
    let mus = floats(mu)?;
    for b in floats(beta)? {
        for &m in &mus {
            let g = GwBoundInputs::with_alpha_gw(alpha_gw, m)?;
            t.push(vec![b.into(), m.into(), alpha_gw.into(), gw_ratio_bound(b, g)?.into()]);
        }
    }
    Ok(t)
}

fn intervals(alpha: f64, beta: f64, x: Option<f64>) -> anyhow::Result<Table> {
    let p = PowerLawParams::new(alpha, beta)?;
    let delta = p.max_degree();
    let mut ranges = vec![(1, delta)];
    if let Some(x) = x {
        if !(x > 0.0 && x <= 1.0) {
            bail!("--x must lie in (0, 1], got {x}");
        }
        let xd = x * delta as f64;
        let low = xd.floor() as u64;
        if low >= 1 {
            ranges.push((1, low.min(delta)));
        }
        ranges.push(((xd.ceil() as u64).clamp(1, delta), delta));
    }
    let mut a = 1u64;
    while a <= delta {
        let b = a.saturating_mul(2).saturating_sub(1).min(delta);
        ranges.push((a, b));
        a = match a.checked_mul(2) {
            Some(n) => n,
            None => break,
        };
    }
    let mut t = Table::new(&[
        "a",
        "b",
        "size_exact",
        "size_lo",
        "size_hi",
        "size_in_bounds",
        "volume_exact",
        "volume_lo",
        "volume_hi",
        "volume_in_bounds",
    ]);
    for (a, b) in ranges {
        let s = interval_sums(&p, a, b)?;
        let sb = interval_size_bounds(&p, a, b)?;
        let vb = interval_volume_bounds(&p, a, b)?;
        t.push(vec![
            a.into(),
            b.into(),
            s.size.into(),
            sb.lo.into(),
            sb.hi.into(),
            sb.contains(s.size as f64).into(),
            s.volume.into(),
            vb.lo.into(),
            vb.hi.into(),
            vb.contains(s.volume as f64).into(),
        ]);
    }
    Ok(t)
}

fn estimates(alpha: &str, beta: &str) -> anyhow::Result<Table> {
    let mut t = Table::new(&[
        "alpha",
        "beta",
        "max_degree",
        "nodes_exact",
        "nodes_estimate",
        "nodes_ratio",
        "edges_exact",
        "edges_estimate",
        "edges_ratio",
    ]);
    let betas = floats(beta)?;
    for a in floats(alpha)? {
        for &b in &betas {
            let p = PowerLawParams::new(a, b)?;
            let s = interval_sums(&p, 1, p.max_degree())?;
            let edges = s.volume / 2;
            let (ne, ee) = (node_count_estimate(&p), edge_count_estimate(&p));
            t.push(vec![
                a.into(),
                b.into(),
                p.max_degree().into(),
                s.size.into(),
                ne.into(),
                (s.size as f64 / ne).into(),
                edges.into(),
                ee.into(),
                (edges as f64 / ee).into(),
            ]);
        }
    }
    Ok(t)
}

fn core_strength(alpha: &str, seeds: Option<&str>, budget: u64) -> anyhow::Result<Table> {
    let alphas = floats(alpha)?;
    let Some(seeds) = seeds else {
        let mut t = Table::new(&["alpha", "core_strength_bound"]);
        for a in alphas {
            t.push(vec![a.into(), core_strength_bound(a).into()]);
        }
        return Ok(t);
    };
    let seeds = integers(seeds)?;
    let mut t = Table::new(&[
        "alpha",
        "seed",
        "vertices",
        "edges",
        "core_strength",
        "core_strength_bound",
    ]);
    for a in alphas {
        let p = PowerLawParams::new(a, 1.0)?;
        for &s in &seeds {
            let (g, _) = generate_with_budget(&p, s, budget)?;
            t.push(vec![
                a.into(),
                s.into(),
                g.vertex_count().into(),
                g.total_multiplicity().into(),
                g.core_strength()?.into(),
                core_strength_bound(a).into(),
            ]);
        }
    }
    Ok(t)
}

fn regime_name(r: GrowthRegime) -> &'static str {
    match r {
        GrowthRegime::Sublinear => "sublinear",
        GrowthRegime::Linear => "linear",
        GrowthRegime::Superlinear => "superlinear",
    }
}

fn functional(f: &str, alpha: &str, x: Option<f64>) -> anyhow::Result<Table> {
    let spec = FunctionalSpec::by_name(f)?;
    let alphas = floats(alpha)?;
    let regime = if alphas.len() >= 2 {
        Cell::from(regime_name(classify_growth(&spec, &alphas)?))
    } else {
        Cell::Empty
    };
    let mut t = Table::new(&[
        "f",
        "alpha",
        "beta_f",
        "x",
        "max_degree",
        "edge_total",
        "ratio1",
        "ratio2",
        "regime",
    ]);
    for a in alphas {
        let x = match x {
            Some(x) => x,
            None => functional_x(&spec, a)?,
        };
        let r = functional_conditions_check(&spec, a, x)?;
        t.push(vec![
            spec.name().into(),
            a.into(),
            r.beta_f.into(),
            r.x.into(),
            r.max_degree.into(),
            r.edge_total.into(),
            r.ratio1.into(),
            r.ratio2.into(),
            regime.clone(),
        ]);
    }
    Ok(t)
}

fn split(eps: &str, beta: &str) -> anyhow::Result<Table> {
    let mut t = Table::new(&["eps", "beta", "tau", "x", "eps_prime"]);
    let betas = floats(beta)?;
    for e in floats(eps)? {
        let tau_e = tau(e)?;
        for &b in &betas {
            let sp = split_params(e, b)?;
            t.push(vec![e.into(), b.into(), tau_e.into(), sp.x.into(), sp.eps_prime.into()]);
        }
    }
    Ok(t)
}
