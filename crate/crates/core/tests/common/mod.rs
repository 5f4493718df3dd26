#![allow(dead_code)]

use plmc_core::rng::SeededRng;
use plmc_core::Multigraph;

pub fn complete(n: usize) -> Multigraph {
    Multigraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j, 1)))).unwrap()
}

pub fn cycle(n: usize) -> Multigraph {
    Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, 1))).unwrap()
}

pub fn path(n: usize) -> Multigraph {
    Multigraph::from_edges(n, (0..n - 1).map(|i| (i, i + 1, 1))).unwrap()
}

pub fn star(leaves: usize) -> Multigraph {
    Multigraph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i, 1))).unwrap()
}

pub fn petersen() -> Multigraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5, 1));
    let spokes = (0..5).map(|i| (i, i + 5, 1));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5, 1));
    Multigraph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

pub fn k33() -> Multigraph {
    Multigraph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j, 1)))).unwrap()
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> Multigraph {
    circular_ladder(3)
}

/// `C_k × K_2`, 3-regular on `2k` vertices.
pub fn circular_ladder(k: usize) -> Multigraph {
    let outer = (0..k).map(move |i| (i, (i + 1) % k, 1));
    let inner = (0..k).map(move |i| (k + i, k + (i + 1) % k, 1));
    let rungs = (0..k).map(move |i| (i, k + i, 1));
    Multigraph::from_edges(2 * k, outer.chain(inner).chain(rungs)).unwrap()
}

/// Erdős–Rényi `G(n, p)` with unit multiplicities.
pub fn gnp(n: usize, p: f64, seed: u64) -> Multigraph {
    let mut rng = SeededRng::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.unit_f64() < p {
                edges.push((i, j, 1));
            }
        }
    }
    Multigraph::from_edges(n, edges).unwrap()
}

/// Random multigraph with self-loops and multiplicities up to `max_mult`.
pub fn random_multigraph(n: usize, edges: usize, max_mult: u64, seed: u64) -> Multigraph {
    let mut rng = SeededRng::new(seed);
    let list: Vec<_> = (0..edges)
        .map(|_| {
            let u = rng.below(n as u64) as usize;
            let v = rng.below(n as u64) as usize;
            (u, v, 1 + rng.below(max_mult))
        })
        .collect();
    Multigraph::from_edges(n, list).unwrap()
}

/// Every edge with a degree-1 endpoint (self-loops aside) is cut.
pub fn leaf_edges_cut(g: &Multigraph, cut: &plmc_core::Cut) -> bool {
    g.edges()
        .iter()
        .filter(|e| !e.is_loop() && (g.degree(e.u) == 1 || g.degree(e.v) == 1))
        .all(|e| cut.side(e.u) != cut.side(e.v))
}
