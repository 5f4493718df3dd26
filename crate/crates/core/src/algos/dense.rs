use alloc::vec::Vec;

use super::local::polish;
use super::result::{AlgoParams, AlgoResult, Algorithm};
use super::state::CutState;
use crate::numeric::{ceil, ln};
use crate::rng::SeededRng;
use crate::{Cut, Error, Multigraph, Result};

/// Largest sample the dense PTAS enumerates (`2^20` placements).
pub const DENSE_SAMPLE_CAP: usize = 20;
const SAMPLE_CONSTANT: f64 = 8.0;

/// `t = min(⌈8/ε² · ln(1/ε)⌉, 20, n)`, at least 1 when `n ≥ 1`.
pub fn sample_size(n: usize, eps: f64) -> usize {
    let raw = ceil(SAMPLE_CONSTANT / (eps * eps) * ln(1.0 / eps));
    let t = if raw.is_finite() && raw > 0.0 {
        (raw as usize).min(DENSE_SAMPLE_CAP)
    } else if raw > 0.0 {
        DENSE_SAMPLE_CAP
    } else {
        1
    };
    t.max(1).min(n)
}

/// Sampling scheme for dense instances.
///
/// A uniform sample `S` of `t` vertices is drawn. For each placement of `S`
/// (the first sampled vertex fixed to side 0) every other vertex goes to the
/// side that cuts more multiplicity to the sample. The best placement is
/// polished by local search, and a polished greedy cut is kept as a fallback
/// candidate.
pub fn dense_ptas(g: &Multigraph, eps: f64, seed: u64) -> Result<AlgoResult> {
    if !(eps > 0.0) {
        return Err(Error::Domain(alloc::format!("eps must be positive, got {eps}")));
    }
    let n = g.vertex_count();
    let t = sample_size(n, eps);
    let params = AlgoParams {
        eps: Some(eps),
        seed: Some(seed),
        sample_size: Some(t),
        ..AlgoParams::default()
    };
    if n == 0 {
        return Ok(AlgoResult::new(Algorithm::DensePtas, 0, Cut::new(0), params));
    }
    let mut rng = SeededRng::new(seed);
    let sample = rng.sample_indices(n, t);
    let best = best_placement(g, &sample);

    let mut cut = polish(g, best);
    let mut value = g.cut_value(&cut)?;
    let fallback = polish(g, super::greedy_cut(g)?.cut);
    let fv = g.cut_value(&fallback)?;
    if super::better(fv, &fallback, value, &cut) {
        cut = fallback;
        value = fv;
    }
    Ok(AlgoResult::new(Algorithm::DensePtas, value, cut, params))
}

/// Enumerates placements of `sample` in Gray-code order, keeping every
/// non-sample vertex on its preferred side incrementally.
fn best_placement(g: &Multigraph, sample: &[usize]) -> Cut {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut in_sample = alloc::vec![false; n];
    for &s in sample {
        in_sample[s] = true;
    }
    // score[v] = (multiplicity to side-0 sample) − (to side-1 sample);
    // v belongs on side 1 iff score[v] > 0.
    let mut score = alloc::vec![0i64; n];
    for &s in sample {
        for &(w, m) in adj.neighbors(s) {
            score[w] += m as i64;
        }
    }
    let mut start = Cut::new(n);
    for v in (0..n).filter(|&v| !in_sample[v]) {
        start.set(v, score[v] > 0);
    }
    let mut st = CutState::new(&adj, start);
    let mut best_value = st.value();
    let mut best = st.cut().clone();

    let free: Vec<usize> = sample.iter().skip(1).copied().collect();
    let steps: u64 = 1 << free.len();
    for i in 1..steps {
        let s = free[i.trailing_zeros() as usize];
        let was = st.side(s);
        st.flip(s);
        let delta: i64 = if was { 2 } else { -2 };
        for &(w, m) in adj.neighbors(s) {
            if in_sample[w] {
                continue;
            }
            score[w] += delta * m as i64;
            let want = score[w] > 0;
            if st.side(w) != want {
                st.flip(w);
            }
        }
        let v = st.value();
        if super::better(v, st.cut(), best_value, &best) {
            best_value = v;
            best = st.cut().clone();
        }
    }
    best
}
