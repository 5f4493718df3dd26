use alloc::vec::Vec;

use super::dense::dense_ptas;
use super::greedy::place_greedily;
use super::local::polish;
use super::result::{AlgoParams, AlgoResult, Algorithm, SplitReport};
use crate::generator::target_degree_multiset;
use crate::numeric::ceil_tol;
use crate::plg::{split_params, PowerLawParams};
use crate::{Cut, DegreeInterval, Multigraph, Result};

/// PTAS for `1 < β < 2`: the dense scheme with accuracy `ε′` on the
/// high-degree part `G_{[⌈xΔ⌉, Δ]}`, then greedy placement of the remaining
/// vertices in id order, then local search.
///
/// `Δ` is the larger of the parameter maximum degree and the graph's.
pub fn split_ptas(g: &Multigraph, p: &PowerLawParams, eps: f64, seed: u64) -> Result<AlgoResult> {
    let sp = split_params(eps, p.beta())?;
    let n = g.vertex_count();
    let hi = p.max_degree().max(g.max_degree()).max(1);
    let lo = (ceil_tol(sp.x * p.max_degree() as f64) as u64).max(1);
    let consistent = histogram_consistent(g, p);
    let params = AlgoParams {
        eps: Some(eps),
        seed: Some(seed),
        ..AlgoParams::default()
    };

    let (cut, high, strategy, sample) = if lo <= 1 {
        let r = dense_ptas(g, sp.eps_prime, seed)?;
        (r.cut, n, "dense-whole", r.params.sample_size)
    } else {
        let iv = DegreeInterval::new(lo, hi.max(lo))?;
        let (sub, map) = g.induced_interval_subgraph(iv);
        if map.is_empty() {
            let mut cut = Cut::new(n);
            let mut placed = alloc::vec![false; n];
            place_greedily(&g.adjacency(), &mut cut, &mut placed, 0..n);
            (polish(g, cut), 0, "greedy-only", None)
        } else {
            let r = dense_ptas(&sub, sp.eps_prime, seed)?;
            let mut cut = Cut::new(n);
            let mut placed = alloc::vec![false; n];
            for (i, &v) in map.iter().enumerate() {
                cut.set(v, r.cut.side(i));
                placed[v] = true;
            }
            place_greedily(&g.adjacency(), &mut cut, &mut placed, 0..n);
            (polish(g, cut), map.len(), "dense-high-greedy-rest", r.params.sample_size)
        }
    };
    let value = g.cut_value(&cut)?;
    let mut r = AlgoResult::new(Algorithm::SplitPtas, value, cut, AlgoParams { sample_size: sample, ..params });
    r.split = Some(SplitReport {
        tau: sp.tau,
        x: sp.x,
        eps_prime: sp.eps_prime,
        lo_degree: lo,
        hi_degree: hi,
        high_vertices: high,
        histogram_consistent: consistent,
        strategy,
    });
    Ok(r)
}

/// The graph's degree histogram equals the target multiset of `p`, allowing
/// one vertex to sit one below its target.
fn histogram_consistent(g: &Multigraph, p: &PowerLawParams) -> bool {
    // Building the target multiset costs O(Δ); skip it when Δ is far larger
    // than the graph could realize.
    if p.max_degree() > 4 * g.vertex_count() as u64 + 4 {
        return false;
    }
    let target = target_degree_multiset(p);
    let actual = g.degree_histogram();
    let mut keys: Vec<u64> = target.keys().chain(actual.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let diff: u128 = keys
        .iter()
        .map(|k| {
            let t = target.get(k).copied().unwrap_or(0);
            let a = actual.get(k).copied().unwrap_or(0) as u128;
            t.abs_diff(a)
        })
        .sum();
    diff <= 2
}
