//! The seeded random-matching model: every vertex gets one copy per unit of
//! target degree, the copies are paired by a uniformly random perfect
//! matching, and each pair becomes an edge (a self-loop if both copies belong
//! to the same vertex).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use serde::Serialize;

use crate::plg::{interval_sums, PowerLawParams};
use crate::rng::{SeededRng, RNG_TAG};
use crate::{Error, Multigraph, Result};

/// Default cap on the number of matching copies (`Σ` target degrees).
pub const DEFAULT_COPY_BUDGET: u64 = 1 << 27;

/// Counters describing one generated instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationReport {
    pub seed: u64,
    pub rng: &'static str,
    pub vertex_count: usize,
    /// `|L|` after the parity adjustment.
    pub copy_count: u64,
    /// Whether one copy was dropped to make `|L|` even.
    pub parity_adjusted: bool,
    /// The vertex that lost a copy, if any.
    pub adjusted_vertex: Option<usize>,
    pub edge_total: u64,
    pub self_loop_mult_total: u64,
    /// `Σ (mult − 1)` over non-loop vertex pairs.
    pub multi_edge_excess: u64,
}

/// `{i: y_i}` for `i = 1..=Δ`, zero counts omitted. Costs `O(Δ)`.
pub fn target_degree_multiset(p: &PowerLawParams) -> BTreeMap<u64, u128> {
    (1..=p.max_degree())
        .filter_map(|i| {
            let y = p.degree_count(i).ok()?;
            (y > 0).then_some((i, y))
        })
        .collect()
}

/// Generates an `(α, β)`-PLG with the default copy budget.
pub fn generate(p: &PowerLawParams, seed: u64) -> Result<(Multigraph, GenerationReport)> {
    generate_with_budget(p, seed, DEFAULT_COPY_BUDGET)
}

/// Vertices are numbered by ascending target degree, so the `y_1`
/// degree-1 vertices come first and the maximum-degree vertex is last.
pub fn generate_with_budget(
    p: &PowerLawParams,
    seed: u64,
    budget: u64,
) -> Result<(Multigraph, GenerationReport)> {
    let delta = p.max_degree();
    let sums = interval_sums(p, 1, delta)?;
    if sums.volume > budget as u128 {
        return Err(Error::CopyBudget {
            needed: sums.volume,
            budget,
        });
    }
    let mut degrees = Vec::with_capacity(sums.size as usize);
    for (d, y) in target_degree_multiset(p) {
        degrees.extend(core::iter::repeat(d).take(y as usize));
    }
    generate_from_degrees(&degrees, seed)
}

/// Random-matching multigraph with the given target degrees.
///
/// If the degree sum is odd, one copy of the last vertex of maximum degree is
/// dropped.
pub fn generate_from_degrees(degrees: &[u64], seed: u64) -> Result<(Multigraph, GenerationReport)> {
    let n = degrees.len();
    if n > u32::MAX as usize {
        return Err(Error::Contract("too many vertices for the generator".into()));
    }
    let total: u64 = degrees.iter().sum();
    let adjusted_vertex = if total % 2 == 1 {
        let max = degrees.iter().copied().max().unwrap_or(0);
        degrees.iter().rposition(|&d| d == max)
    } else {
        None
    };

    let mut copies: Vec<u32> = Vec::with_capacity(total as usize);
    for (v, &d) in degrees.iter().enumerate() {
        let d = if Some(v) == adjusted_vertex { d - 1 } else { d };
        copies.extend(core::iter::repeat(v as u32).take(d as usize));
    }
    let mut rng = SeededRng::new(seed);
    rng.shuffle(&mut copies);

    let g = Multigraph::from_edges(
        n,
        copies
            .chunks_exact(2)
            .map(|c| (c[0] as usize, c[1] as usize, 1)),
    )?;
    let multi_edge_excess = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| e.mult - 1)
        .sum();
    let report = GenerationReport {
        seed,
        rng: RNG_TAG,
        vertex_count: n,
        copy_count: copies.len() as u64,
        parity_adjusted: adjusted_vertex.is_some(),
        adjusted_vertex,
        edge_total: g.total_multiplicity(),
        self_loop_mult_total: g.self_loop_total(),
        multi_edge_excess,
    };
    Ok((g, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use libm::log;

    #[test]
    fn multisets() {
        let p = PowerLawParams::new(log(100.0), 2.0).unwrap();
        let m: Vec<_> = target_degree_multiset(&p).into_iter().collect();
        assert_eq!(
            m,
            vec![(1, 100), (2, 25), (3, 11), (4, 6), (5, 4), (6, 2), (7, 2), (8, 1), (9, 1), (10, 1)]
        );
        let p = PowerLawParams::new(log(2.0), 1.0).unwrap();
        let m: Vec<_> = target_degree_multiset(&p).into_iter().collect();
        assert_eq!(m, vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn small_instance_matches_targets() {
        let p = PowerLawParams::new(log(4.0), 2.0).unwrap();
        let (g, r) = generate(&p, 1).unwrap();
        assert_eq!(g.degrees(), &[1, 1, 1, 1, 2]);
        assert!(!r.parity_adjusted);
        assert_eq!(r.copy_count, 6);
        assert_eq!(g.total_multiplicity(), 3);
    }

    #[test]
    fn parity_drops_one_max_degree_copy() {
        let (g, r) = generate_from_degrees(&[1, 1, 3, 3, 3], 9).unwrap();
        assert!(r.parity_adjusted);
        assert_eq!(r.adjusted_vertex, Some(4));
        assert_eq!(g.degrees(), &[1, 1, 3, 3, 2]);
        assert_eq!(r.copy_count, 10);
    }

    #[test]
    fn budget_refusal() {
        let p = PowerLawParams::new(10.0, 1.0).unwrap();
        assert!(matches!(
            generate_with_budget(&p, 0, 1000),
            Err(Error::CopyBudget { budget: 1000, .. })
        ));
    }
}
