use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use plmc_core::algos::{
    beta_gt2_algorithm, dense_ptas, exact_maxcut_with_limit, greedy_cut, gw_sdp, local_search,
    split_ptas, AlgoResult, Algorithm, DEFAULT_ORACLE_LIMIT,
};
use plmc_core::generator::{generate_with_budget, target_degree_multiset, GenerationReport};
use plmc_core::plg::{zeta, PowerLawParams};
use plmc_core::reduction::{
    decision_thresholds, describe, embed_with, lift_thresholds, EmbedOptions,
};
use plmc_core::{Cut, Multigraph};
use serde::Serialize;

use crate::cli::{GenerateArgs, PlgArgs, ReduceArgs, SolveArgs, SolverArgs};
use crate::format::{read_cut, read_graph, write_cut, write_graph, write_text};
use crate::table::{Cell, OutputFormat, Table};

/// `prefix` with `suffix` appended to its last component.
pub fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s: OsString = prefix.as_os_str().to_owned();
    s.push(suffix);
    s.into()
}

/// Writes to `out`, or stdout when absent.
pub fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => write_text(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

impl PlgArgs {
    pub fn resolve(&self) -> anyhow::Result<PowerLawParams> {
        let Some(beta) = self.beta else {
            bail!("--beta is required");
        };
        let alpha = match (self.alpha, self.target_nodes) {
            (Some(a), _) => a,
            (None, Some(n)) => alpha_for_nodes(n, beta)?,
            (None, None) => bail!("give --alpha or --target-nodes"),
        };
        Ok(PowerLawParams::new(alpha, beta)?)
    }
}

/// `α` with `ζ(β)·e^α = n`.
pub fn alpha_for_nodes(n: f64, beta: f64) -> anyhow::Result<f64> {
    if !(n >= 1.0 && n.is_finite()) {
        bail!("--target-nodes must be at least 1, got {n}");
    }
    if !(beta > 1.0) {
        bail!("--target-nodes needs beta > 1, got {beta}");
    }
    Ok((n / zeta(beta, 1e-12)?).ln())
}

#[derive(Serialize)]
struct GenerateOutput {
    alpha: f64,
    beta: f64,
    max_degree: u64,
    #[serde(flatten)]
    report: GenerationReport,
    degree_histogram: BTreeMap<u64, u64>,
    target_histogram: BTreeMap<u64, u128>,
}

pub fn generate(a: GenerateArgs) -> anyhow::Result<()> {
    let p = a.plg.resolve()?;
    let (g, report) = generate_with_budget(&p, a.seed, a.copy_budget)?;
    write_graph(&a.out, &g)?;
    let out = GenerateOutput {
        alpha: p.alpha(),
        beta: p.beta(),
        max_degree: p.max_degree(),
        report,
        degree_histogram: g.degree_histogram(),
        target_histogram: target_degree_multiset(&p),
    };
    let report_path = a.report.unwrap_or_else(|| a.out.with_extension("report.json"));
    write_text(&report_path, &json(&out)?)?;
    eprintln!(
        "wrote {} ({} vertices, {} edges) and {}",
        a.out.display(),
        g.vertex_count(),
        g.total_multiplicity(),
        report_path.display()
    );
    Ok(())
}

/// Runs one algorithm. `plg` is needed by the split PTAS only.
pub fn run_algorithm(
    g: &Multigraph,
    algo: Algorithm,
    s: &SolverArgs,
    plg: Option<&PowerLawParams>,
    start: Option<Cut>,
) -> anyhow::Result<AlgoResult> {
    Ok(match algo {
        Algorithm::Exact => {
            exact_maxcut_with_limit(g, s.oracle_limit.unwrap_or(DEFAULT_ORACLE_LIMIT))?
        }
        Algorithm::Greedy => greedy_cut(g)?,
        Algorithm::Local => local_search(g, start.unwrap_or_else(|| Cut::new(g.vertex_count())))?,
        Algorithm::DensePtas => dense_ptas(g, s.eps, s.seed)?,
        Algorithm::SplitPtas => {
            let p = plg.context("split-ptas needs the instance parameters (--alpha or --target-nodes, and --beta)")?;
            split_ptas(g, p, s.eps, s.seed)?
        }
        Algorithm::Gw => gw_sdp(g, s.seed, s.restarts)?,
        Algorithm::BetaGt2 => beta_gt2_algorithm(g, s.seed, s.restarts)?,
    })
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    graph: String,
    vertices: usize,
    edge_total: u64,
    #[serde(flatten)]
    result: &'a AlgoResult,
}

pub fn solve(a: SolveArgs) -> anyhow::Result<()> {
    let g = read_graph(&a.graph, a.strict)?;
    let plg = if a.algo == Algorithm::SplitPtas {
        Some(a.plg.resolve()?)
    } else {
        None
    };
    let start = match &a.start {
        Some(path) => {
            let c = read_cut(path)?;
            if c.len() != g.vertex_count() {
                bail!("start cut has {} sides, graph has {} vertices", c.len(), g.vertex_count());
            }
            Some(c)
        }
        None => None,
    };
    let result = run_algorithm(&g, a.algo, &a.solver, plg.as_ref(), start)?;
    let out = SolveOutput {
        graph: a.graph.display().to_string(),
        vertices: g.vertex_count(),
        edge_total: g.total_multiplicity(),
        result: &result,
    };
    emit(&json(&out)?, a.out.as_deref())?;
    let cut_path = a.cut.or_else(|| a.out.as_ref().map(|o| o.with_extension("cut")));
    if let Some(path) = cut_path {
        write_cut(&path, &result.cut)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ThresholdOutput {
    n: u64,
    eps: f64,
    yes_value: f64,
    no_value: f64,
    offset: u64,
    lifted_yes: f64,
    lifted_no: f64,
}

pub fn reduce(a: ReduceArgs) -> anyhow::Result<()> {
    let g3 = read_graph(&a.graph, a.strict)?;
    let opts = EmbedOptions {
        strategy: a.strategy.into(),
        degree3_count: a.degree3_count,
        host_budget: a.host_budget,
    };
    let thresholds = match (a.n, a.eps) {
        (Some(n), Some(eps)) => Some(decision_thresholds(n, eps)?),
        _ => None,
    };
    let e = embed_with(&g3, a.beta, &opts)?;
    let prefix = a.out.unwrap_or_else(|| a.graph.with_extension(""));

    let host = with_suffix(&prefix, ".host.plmc");
    write_graph(&host, &e.host)?;
    write_text(&with_suffix(&prefix, ".plan.json"), &json(&e.plan)?)?;
    write_text(&with_suffix(&prefix, ".report.json"), &json(&e.report)?)?;

    let mut cert = Table::new(&[
        "gadget",
        "kind",
        "degrees",
        "counts",
        "first_vertex",
        "vertex_count",
        "edge_total",
        "opt_value",
        "method",
        "certified_value",
    ]);
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
    for r in &e.plan.gadgets {
        cert.push(vec![
            r.id.into(),
            r.kind.tag().into(),
            join(&r.degrees).into(),
            join(&r.counts).into(),
            r.first_vertex.into(),
            r.vertex_count.into(),
            r.edge_total.into(),
            r.opt_value.into(),
            r.certification.method.tag().into(),
            Cell::from(r.certification.value),
        ]);
    }
    write_text(&with_suffix(&prefix, ".cert.csv"), &cert.render(OutputFormat::Csv)?)?;

    if let Some(t) = thresholds {
        let (lifted_yes, lifted_no) = lift_thresholds(&t, e.report.offset);
        let out = ThresholdOutput {
            n: t.n_param,
            eps: t.eps,
            yes_value: t.yes_value,
            no_value: t.no_value,
            offset: e.report.offset,
            lifted_yes,
            lifted_no,
        };
        write_text(&with_suffix(&prefix, ".thresholds.json"), &json(&out)?)?;
    }
    println!("{}", describe(&e.plan));
    println!(
        "host {} vertices, {} edges, offset {}; wrote {}.{{host.plmc,plan.json,report.json,cert.csv{}}}",
        e.report.host_vertex_count,
        e.report.host_edge_total,
        e.report.offset,
        prefix.display(),
        if thresholds.is_some() { ",thresholds.json" } else { "" }
    );
    Ok(())
}
