use alloc::vec::Vec;

use super::result::{AlgoParams, AlgoResult, Algorithm};
use super::state::CutState;
use crate::{Cut, Error, Multigraph, Result};

/// Largest connected component the exact solver accepts by default.
pub const DEFAULT_ORACLE_LIMIT: usize = 26;

/// Exact MAX-CUT with the default component-size limit.
pub fn exact_maxcut(g: &Multigraph) -> Result<AlgoResult> {
    exact_maxcut_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

/// Exact MAX-CUT by Gray-code enumeration, one connected component at a
/// time. Within a component the smallest vertex stays on side 0, so a
/// component of `k` vertices costs `2^{k−1}` incremental steps.
///
/// Refuses when some component has more than `limit` vertices.
pub fn exact_maxcut_with_limit(g: &Multigraph, limit: usize) -> Result<AlgoResult> {
    let n = g.vertex_count();
    let (labels, count) = g.components();
    let mut members: Vec<Vec<usize>> = alloc::vec![Vec::new(); count];
    for v in 0..n {
        members[labels[v]].push(v);
    }
    if let Some(big) = members.iter().map(Vec::len).find(|&k| k > limit) {
        return Err(Error::OracleLimit { size: big, limit });
    }
    let mut cut = Cut::new(n);
    for comp in members.iter().filter(|c| c.len() > 1) {
        let (sub, map) = g.induced_subgraph(comp)?;
        let best = solve_component(&sub);
        for (i, &v) in map.iter().enumerate() {
            cut.set(v, best.side(i));
        }
    }
    let value = g.cut_value(&cut)?;
    let params = AlgoParams {
        oracle_limit: Some(limit),
        ..AlgoParams::default()
    };
    let mut r = AlgoResult::new(Algorithm::Exact, value, cut, params);
    r.certified_optimal = true;
    Ok(r)
}

fn solve_component(g: &Multigraph) -> Cut {
    let k = g.vertex_count();
    let adj = g.adjacency();
    let mut st = CutState::new(&adj, Cut::new(k));
    let mut best_value = st.value();
    let mut best = st.cut().clone();
    // Step i of the reflected Gray code flips bit trailing_zeros(i); bit b
    // maps to vertex b + 1.
    let steps: u64 = 1 << (k - 1);
    for i in 1..steps {
        st.flip(i.trailing_zeros() as usize + 1);
        let v = st.value();
        if super::better(v, st.cut(), best_value, &best) {
            best_value = v;
            best = st.cut().clone();
        }
    }
    best
}
