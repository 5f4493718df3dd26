use alloc::vec::Vec;

use super::local::polish;
use super::result::{AlgoParams, AlgoResult, Algorithm};
use super::sdp::gw_sdp;
use crate::{Cut, DegreeInterval, Multigraph, Result};

/// GW on `G_{[2,Δ]}`, then every degree-1 vertex opposite its neighbor.
///
/// Two matched degree-1 vertices are split with the lower id on side 0.
/// A final local search keeps all degree-1 edges cut, since a 1-flip optimal
/// cut never leaves a leaf on its neighbor's side.
pub fn beta_gt2_algorithm(g: &Multigraph, seed: u64, restarts: usize) -> Result<AlgoResult> {
    let n = g.vertex_count();
    let mut cut = Cut::new(n);
    let max = g.max_degree().max(2);
    let (core, map) = g.induced_interval_subgraph(DegreeInterval::new(2, max)?);
    let mut sdp = None;
    if core.vertex_count() >= 2 {
        let r = gw_sdp(&core, seed, restarts)?;
        for (i, &v) in map.iter().enumerate() {
            cut.set(v, r.cut.side(i));
        }
        sdp = r.sdp;
    }
    let adj = g.adjacency();
    for v in (0..n).filter(|&v| g.degree(v) == 1) {
        let (w, _) = adj.neighbors(v)[0];
        if g.degree(w) >= 2 {
            cut.set(v, !cut.side(w));
        } else {
            cut.set(v, v > w);
        }
    }
    let cut = polish(g, cut);
    let value = g.cut_value(&cut)?;
    let params = AlgoParams {
        seed: Some(seed),
        restarts: Some(restarts),
        ..AlgoParams::default()
    };
    let mut r = AlgoResult::new(Algorithm::BetaGt2, value, cut, params);
    r.sdp = sdp.map(|mut s| {
        // The core bound plus all leaf edges bounds the whole graph.
        let leaf_edges = leaf_edge_count(g);
        s.upper_bound = s.upper_bound.map(|u| u + leaf_edges as f64);
        s.sdp_value += leaf_edges as f64;
        s
    });
    Ok(r)
}

fn leaf_edge_count(g: &Multigraph) -> u64 {
    g.edges()
        .iter()
        .filter(|e| !e.is_loop() && (g.degree(e.u) == 1 || g.degree(e.v) == 1))
        .count() as u64
}

/// Fraction of degree-1 vertices whose neighbor also has degree 1; 0 when
/// there are none.
pub fn mu_fraction(g: &Multigraph) -> f64 {
    let adj = g.adjacency();
    let leaves: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 1).collect();
    if leaves.is_empty() {
        return 0.0;
    }
    let paired = leaves
        .iter()
        .filter(|&&v| g.degree(adj.neighbors(v)[0].0) == 1)
        .count();
    paired as f64 / leaves.len() as f64
}
