//! Embedding a 3-regular graph into a power-law host whose other degree
//! classes are realized by gadgets with known optimal cuts.

use alloc::format;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use serde::Serialize;

use super::certify::{certify, Certification};
use super::gadgets::*;
use crate::generator::target_degree_multiset;
use crate::numeric::{floor_tol, ln, powf};
use crate::plg::{interval_size_exact, PowerLawParams};
use crate::{Cut, Error, Multigraph, Result};

/// Default cap on host vertices.
pub const DEFAULT_HOST_BUDGET: u64 = 1 << 24;

/// `α = ln(3^β·N)`, so that the host has exactly `N` vertices of degree 3,
/// and no padding.
pub fn choose_alpha(n: u64, beta: f64) -> Result<(f64, u64)> {
    choose_alpha_with_k(n, beta, n)
}

/// `α = ln(3^β·k)` for a requested degree-3 count `k ≥ N` with `k − N`
/// divisible by 4; the surplus is filled by `(k − N)/4` disjoint `K_4`.
pub fn choose_alpha_with_k(n: u64, beta: f64, k: u64) -> Result<(f64, u64)> {
    if n < 4 {
        return Err(Error::Domain(format!("need N >= 4, got {n}")));
    }
    if k < n || (k - n) % 4 != 0 {
        return Err(Error::Domain(format!(
            "degree-3 count {k} must be N = {n} plus a multiple of 4"
        )));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    let three_beta = powf(3.0, beta);
    let alpha = ln(three_beta * k as f64);
    let p = PowerLawParams::new(alpha, beta)?;
    let y3 = floor_tol(p.scale() / three_beta) as u64;
    if p.max_degree() < 3 || y3 != k {
        return Err(Error::Contract(format!(
            "alpha = {alpha} yields {y3} degree-3 vertices, wanted {k}"
        )));
    }
    Ok((alpha, (k - n) / 4))
}

/// Which gadget family realizes the degree classes other than 1 and 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbedStrategy {
    /// Multipaths for `β > 1`, wheels otherwise.
    #[default]
    Auto,
    Multipath,
    Wheel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbedOptions {
    pub strategy: EmbedStrategy,
    /// Degree-3 count of the host; `None` means exactly the input size.
    pub degree3_count: Option<u64>,
    pub host_budget: u64,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        Self {
            strategy: EmbedStrategy::Auto,
            degree3_count: None,
            host_budget: DEFAULT_HOST_BUDGET,
        }
    }
}

/// One degree class `i ∉ {1, 3}` and how it was realized.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanEntry {
    pub degree: u64,
    pub count: u64,
    pub case: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gadget: Option<usize>,
}

/// A placed gadget.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GadgetRecord {
    pub id: usize,
    pub kind: GadgetKind,
    /// The degree classes it realizes (two for joined wheels, none for the
    /// matching).
    pub degrees: Vec<u64>,
    /// Node counts per degree class; the leaf count for the matching.
    pub counts: Vec<u64>,
    pub first_vertex: usize,
    pub vertex_count: usize,
    pub edge_total: u64,
    pub opt_value: u64,
    pub certification: Certification,
}

impl GadgetRecord {
    fn rebuild(&self) -> Result<Gadget> {
        let d = |k: usize| self.degrees.get(k).copied().unwrap_or(0);
        let c = |k: usize| self.counts.get(k).copied().unwrap_or(0);
        match self.kind {
            GadgetKind::Multipath(_) => build_multipath(d(0), c(0)),
            GadgetKind::Wheel => build_wheel(d(0), c(0)),
            GadgetKind::Joined => build_joined_wheels(d(0), c(0), d(1), c(1)),
            GadgetKind::LeftoverWheel => build_leftover_wheel(d(0), c(0)),
            GadgetKind::Matching => build_matching(c(0)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GadgetPlan {
    pub alpha_chosen: f64,
    pub beta: f64,
    pub strategy: &'static str,
    pub max_degree: u64,
    pub input_vertices: usize,
    pub degree3_count: u64,
    pub pad_k4_count: u64,
    pub entries: Vec<PlanEntry>,
    /// Odd degrees `i ≥ 5` with an odd node count (wheel strategy only).
    pub critical_set: Vec<u64>,
    /// Consecutive pairs of the critical set, joined by a unit edge.
    pub critical_matching: Vec<(u64, u64)>,
    /// The unpaired largest critical degree, if `|J|` is odd.
    pub leftover: Option<u64>,
    pub leaves_consumed: u64,
    pub matching_size: u64,
    /// One degree-1 slot left as an isolated vertex when the residual leaf
    /// budget is odd.
    pub parity_deviation: bool,
    pub host_vertex_count: usize,
    pub gadgets: Vec<GadgetRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub g3_vertex_count: usize,
    pub pad_k4_count: u64,
    pub host_vertex_count: usize,
    pub host_edge_total: u64,
    pub gadget_edge_total: u64,
    pub gadget_opt_value: u64,
    /// Added to any cut of the padded input by cutting the gadgets optimally.
    pub offset: u64,
    /// Vertices whose degree differs from the target sequence.
    pub histogram_deviation: u64,
}

#[derive(Debug, Clone)]
pub struct Embedding {
    pub host: Multigraph,
    pub plan: GadgetPlan,
    pub report: EmbeddingReport,
}

fn check_cubic(g3: &Multigraph) -> Result<()> {
    if g3.vertex_count() < 4 {
        return Err(Error::Contract("input needs at least 4 vertices".into()));
    }
    if g3.self_loop_total() > 0 || g3.edges().iter().any(|e| e.mult != 1) {
        return Err(Error::Contract("input must be a simple graph".into()));
    }
    if let Some(v) = (0..g3.vertex_count()).find(|&v| g3.degree(v) != 3) {
        return Err(Error::Contract(format!(
            "input is not 3-regular: vertex {v} has degree {}",
            g3.degree(v)
        )));
    }
    Ok(())
}

/// `g3` plus `pads` disjoint copies of `K_4`.
pub fn pad_with_k4(g3: &Multigraph, pads: u64) -> Result<Multigraph> {
    let n = g3.vertex_count();
    let mut edges: Vec<(usize, usize, u64)> = g3.edges().iter().map(|e| (e.u, e.v, e.mult)).collect();
    for p in 0..pads as usize {
        let b = n + 4 * p;
        for a in 0..4 {
            for c in a + 1..4 {
                edges.push((b + a, b + c, 1));
            }
        }
    }
    Multigraph::from_edges(n + 4 * pads as usize, edges)
}

pub fn embed(g3: &Multigraph, beta: f64) -> Result<Embedding> {
    embed_with(g3, beta, &EmbedOptions::default())
}

/// Builds the host `G' = G ⊎ pads ⊎ W ⊎ M`.
///
/// Vertex layout: the input graph, the `K_4` pads, the gadgets in plan
/// order, the residual matching, and possibly one isolated vertex.
pub fn embed_with(g3: &Multigraph, beta: f64, opts: &EmbedOptions) -> Result<Embedding> {
    check_cubic(g3)?;
    let n3 = g3.vertex_count() as u64;
    let k = opts.degree3_count.unwrap_or(n3);
    let (alpha, pads) = choose_alpha_with_k(n3, beta, k)?;
    let p = PowerLawParams::new(alpha, beta)?;
    let delta = p.max_degree();
    let total_vertices = interval_size_exact(&p, 1, delta)?;
    if total_vertices > opts.host_budget as u128 {
        return Err(Error::Contract(format!(
            "host would have {total_vertices} vertices, budget is {}",
            opts.host_budget
        )));
    }
    let use_wheels = match opts.strategy {
        EmbedStrategy::Auto => beta <= 1.0,
        EmbedStrategy::Multipath => false,
        EmbedStrategy::Wheel => true,
    };
    let y = |i: u64| p.count_unchecked(i) as u64;

    let mut entries = Vec::new();
    let mut built: Vec<(Gadget, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut critical = Vec::new();
    for i in (2..=delta).filter(|&i| i != 3) {
        let ni = y(i);
        if ni == 0 {
            entries.push(PlanEntry { degree: i, count: 0, case: "skip", gadget: None });
            continue;
        }
        if use_wheels && i % 2 == 1 && ni % 2 == 1 {
            critical.push(i);
            continue;
        }
        let g = if use_wheels { build_wheel(i, ni)? } else { build_multipath(i, ni)? };
        entries.push(PlanEntry { degree: i, count: ni, case: g.kind.tag(), gadget: Some(built.len()) });
        built.push((g, alloc::vec![i], alloc::vec![ni]));
    }
    let mut critical_matching = Vec::new();
    for pair in critical.chunks_exact(2) {
        let (i, j) = (pair[0], pair[1]);
        let g = build_joined_wheels(i, y(i), j, y(j))?;
        for d in [i, j] {
            entries.push(PlanEntry { degree: d, count: y(d), case: g.kind.tag(), gadget: Some(built.len()) });
        }
        built.push((g, alloc::vec![i, j], alloc::vec![y(i), y(j)]));
        critical_matching.push((i, j));
    }
    let leftover = (critical.len() % 2 == 1).then(|| critical[critical.len() - 1]);
    if let Some(i) = leftover {
        let g = build_leftover_wheel(i, y(i))?;
        entries.push(PlanEntry { degree: i, count: y(i), case: g.kind.tag(), gadget: Some(built.len()) });
        built.push((g, alloc::vec![i], alloc::vec![y(i)]));
    }
    entries.sort_by_key(|e| e.degree);

    let consumed: u64 = built.iter().map(|(g, _, _)| g.leaves).sum();
    let y1 = y(1);
    if consumed > y1 {
        return Err(Error::Infeasible(format!(
            "gadgets need {consumed} degree-1 vertices but (alpha, beta) = ({alpha:.6}, {beta}) \
             provides only {y1}; the wheel strategy consumes no degree-1 vertices"
        )));
    }
    let residual = y1 - consumed;
    let matched = residual - residual % 2;
    let isolated = residual % 2;
    if matched > 0 {
        built.push((build_matching(matched)?, Vec::new(), alloc::vec![matched]));
    }

    let padded = pad_with_k4(g3, pads)?;
    let mut edges: Vec<(usize, usize, u64)> = padded.edges().iter().map(|e| (e.u, e.v, e.mult)).collect();
    let mut next = padded.vertex_count();
    let mut gadgets = Vec::with_capacity(built.len());
    for (id, (g, degrees, counts)) in built.into_iter().enumerate() {
        let certification = certify(&g)?;
        edges.extend(g.graph.edges().iter().map(|e| (e.u + next, e.v + next, e.mult)));
        gadgets.push(GadgetRecord {
            id,
            kind: g.kind,
            degrees,
            counts,
            first_vertex: next,
            vertex_count: g.graph.vertex_count(),
            edge_total: g.edge_total(),
            opt_value: g.opt_value,
            certification,
        });
        next += g.graph.vertex_count();
    }
    let host_n = next + isolated as usize;
    let host = Multigraph::from_edges(host_n, edges)?;

    let target = target_degree_multiset(&p);
    let actual = host.degree_histogram();
    let deviation = histogram_distance(&target, &actual);

    let gadget_edge_total = gadgets.iter().map(|g| g.edge_total).sum();
    let offset = gadgets.iter().map(|g| g.opt_value).sum();
    let plan = GadgetPlan {
        alpha_chosen: alpha,
        beta,
        strategy: if use_wheels { "wheel" } else { "multipath" },
        max_degree: delta,
        input_vertices: g3.vertex_count(),
        degree3_count: k,
        pad_k4_count: pads,
        entries,
        critical_set: critical,
        critical_matching,
        leftover,
        leaves_consumed: consumed,
        matching_size: matched / 2,
        parity_deviation: isolated == 1,
        host_vertex_count: host_n,
        gadgets,
    };
    let report = EmbeddingReport {
        g3_vertex_count: g3.vertex_count(),
        pad_k4_count: pads,
        host_vertex_count: host_n,
        host_edge_total: host.total_multiplicity(),
        gadget_edge_total,
        gadget_opt_value: offset,
        offset,
        histogram_deviation: deviation,
    };
    Ok(Embedding { host, plan, report })
}

/// Number of vertices that would have to change degree to turn one
/// histogram into the other (for equal totals).
fn histogram_distance(
    target: &BTreeMap<u64, u128>,
    actual: &BTreeMap<u64, u64>,
) -> u64 {
    let mut keys: Vec<u64> = target.keys().chain(actual.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let diff: u128 = keys
        .iter()
        .map(|d| {
            let t = target.get(d).copied().unwrap_or(0);
            let a = actual.get(d).copied().unwrap_or(0) as u128;
            t.abs_diff(a)
        })
        .sum();
    diff.div_ceil(2) as u64
}

/// A cut of `host` that cuts every gadget optimally, with the padded input
/// on side 0.
pub fn optimal_gadget_cut(plan: &GadgetPlan, host: &Multigraph) -> Result<Cut> {
    if host.vertex_count() != plan.host_vertex_count {
        return Err(Error::Contract(format!(
            "plan expects {} host vertices, got {}",
            plan.host_vertex_count,
            host.vertex_count()
        )));
    }
    let mut cut = Cut::new(host.vertex_count());
    for rec in &plan.gadgets {
        let g = rec.rebuild()?;
        let base = rec.first_vertex;
        let fits = g.graph.vertex_count() == rec.vertex_count
            && base + rec.vertex_count <= host.vertex_count()
            && g.graph.edges().iter().all(|e| host.multiplicity(e.u + base, e.v + base) == e.mult);
        if !fits {
            return Err(Error::Contract(format!("gadget {} does not match the host", rec.id)));
        }
        for v in 0..rec.vertex_count {
            cut.set(base + v, g.witness.side(v));
        }
    }
    Ok(cut)
}

/// Human-readable one-line summary of a plan.
pub fn describe(plan: &GadgetPlan) -> String {
    format!(
        "alpha={:.6} beta={} strategy={} gadgets={} matching={} pads={}",
        plan.alpha_chosen,
        plan.beta,
        plan.strategy,
        plan.gadgets.len(),
        plan.matching_size,
        plan.pad_k4_count
    )
}
