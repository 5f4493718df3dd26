//! Degree-class gadgets: multipaths with pendant leaves, multi-edge wheels,
//! joined pairs of odd wheels, the leftover wheel and the residual matching.

use alloc::format;
use alloc::vec::Vec;
use serde::Serialize;

use crate::{Cut, Error, Multigraph, Result};

/// Which construction produced a gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(into = "&'static str")]
pub enum GadgetKind {
    /// Path with leaves; the case is `1 + 2·(i odd) + (n odd)`.
    Multipath(u8),
    Wheel,
    Joined,
    LeftoverWheel,
    Matching,
}

impl GadgetKind {
    pub fn tag(self) -> &'static str {
        match self {
            GadgetKind::Multipath(1) => "multipath-1",
            GadgetKind::Multipath(2) => "multipath-2",
            GadgetKind::Multipath(3) => "multipath-3",
            GadgetKind::Multipath(_) => "multipath-4",
            GadgetKind::Wheel => "wheel",
            GadgetKind::Joined => "joined",
            GadgetKind::LeftoverWheel => "leftover-wheel",
            GadgetKind::Matching => "matching",
        }
    }
}

impl From<GadgetKind> for &'static str {
    fn from(k: GadgetKind) -> Self {
        k.tag()
    }
}

/// A built gadget with its optimum and a cut attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: Multigraph,
    pub opt_value: u64,
    pub witness: Cut,
    /// Vertices of degree 1 inside the gadget.
    pub leaves: u64,
}

impl Gadget {
    pub fn edge_total(&self) -> u64 {
        self.graph.total_multiplicity()
    }
}

fn lo(i: u64) -> u64 {
    i / 2
}

fn hi(i: u64) -> u64 {
    i - i / 2
}

/// `n` path nodes of degree exactly `i` plus pendant leaves at the two ends.
///
/// * `i` even: every path edge has multiplicity `i/2`, each end gets `i/2`
///   leaves.
/// * `i` odd, `n` even: multiplicities `⌈i/2⌉, ⌊i/2⌋, …, ⌈i/2⌉`; each end
///   gets `⌊i/2⌋` leaves (`i − 1` in total).
/// * `i` odd, `n` odd: multiplicities `⌊i/2⌋, ⌈i/2⌉, …, ⌈i/2⌉`; the first
///   end gets `⌈i/2⌉` leaves, the last `⌊i/2⌋` (`i` in total).
/// * `n = 1`: a star with `i` leaves.
///
/// The gadget is a tree, so every edge is cut by alternating the path.
pub fn build_multipath(i: u64, n: u64) -> Result<Gadget> {
    if i < 2 || i == 3 {
        return Err(Error::Contract(format!("multipath needs i >= 2, i != 3; got {i}")));
    }
    if n == 0 {
        return Err(Error::Contract("multipath needs at least one node".into()));
    }
    let n = n as usize;
    let mut edges: Vec<(usize, usize, u64)> = Vec::new();
    let (first_leaves, last_leaves) = if n == 1 {
        (i, 0)
    } else if i % 2 == 0 {
        for j in 0..n - 1 {
            edges.push((j, j + 1, i / 2));
        }
        (i / 2, i / 2)
    } else {
        let start_hi = n % 2 == 0;
        for j in 0..n - 1 {
            let m = if (j % 2 == 0) == start_hi { hi(i) } else { lo(i) };
            edges.push((j, j + 1, m));
        }
        if start_hi {
            (lo(i), lo(i))
        } else {
            (hi(i), lo(i))
        }
    };
    let leaves = first_leaves + last_leaves;
    let total = n + leaves as usize;
    let mut sides = Vec::with_capacity(total);
    sides.extend((0..n).map(|j| j % 2 == 1));
    let mut next = n;
    for (anchor, count) in [(0, first_leaves), (n - 1, last_leaves)] {
        for _ in 0..count {
            edges.push((anchor, next, 1));
            sides.push(anchor % 2 == 0);
            next += 1;
        }
    }
    let graph = Multigraph::from_edges(total, edges)?;
    let case = 1 + 2 * (i % 2) as u8 + (n % 2) as u8;
    Ok(Gadget {
        kind: GadgetKind::Multipath(case),
        opt_value: graph.total_multiplicity(),
        graph,
        witness: Cut::from_sides(sides),
        leaves,
    })
}

/// A cycle of `n` nodes with multiplicities alternating `⌊i/2⌋, ⌈i/2⌉`
/// starting at the edge `{v_0, v_1}`; every node has degree `i`. For `n = 1`
/// the cycle is a self-loop and for `n = 2` the two edges merge.
fn cycle_edges(i: u64, n: usize) -> Vec<(usize, usize, u64)> {
    (0..n)
        .map(|k| (k, (k + 1) % n, if k % 2 == 0 { lo(i) } else { hi(i) }))
        .collect()
}

/// Alternating sides; for odd `n` the edge `{v_0, v_1}` is left uncut.
fn cycle_witness(n: usize) -> Vec<bool> {
    if n % 2 == 0 {
        (0..n).map(|k| k % 2 == 1).collect()
    } else {
        (0..n).map(|k| k >= 1 && k % 2 == 0).collect()
    }
}

/// Wheel for a non-critical class (`i` even or `n` even).
///
/// Optimum: the full multiplicity for even `n`; for odd `n` (so `i` even)
/// one edge of multiplicity `i/2` must stay uncut.
pub fn build_wheel(i: u64, n: u64) -> Result<Gadget> {
    if i < 2 || n == 0 {
        return Err(Error::Contract(format!("invalid wheel ({i}, {n})")));
    }
    if i % 2 == 1 && n % 2 == 1 {
        return Err(Error::Contract(format!(
            "({i}, {n}) is critical; use joined or leftover wheels"
        )));
    }
    let n = n as usize;
    let graph = Multigraph::from_edges(n, cycle_edges(i, n))?;
    let total = graph.total_multiplicity();
    let opt_value = if n % 2 == 1 { total - i / 2 } else { total };
    Ok(Gadget {
        kind: GadgetKind::Wheel,
        graph,
        opt_value,
        witness: Cut::from_sides(cycle_witness(n)),
        leaves: 0,
    })
}

fn require_critical(i: u64, n: u64) -> Result<()> {
    if i < 5 || i % 2 == 0 || n % 2 == 0 {
        return Err(Error::Contract(format!("({i}, {n}) is not critical")));
    }
    Ok(())
}

/// Internal optimum of a critical cycle: `(i·n − 1)/2 − ⌊i/2⌋`.
fn critical_cycle_opt(i: u64, n: u64) -> u64 {
    (i * n - 1) / 2 - lo(i)
}

/// Two critical cycles whose special nodes `v_0` (both cycle edges
/// `⌊i/2⌋`) are joined by a unit edge.
///
/// Optimum `(i·n_i − 1)/2 − ⌊i/2⌋ + (j·n_j − 1)/2 − ⌊j/2⌋ + 1`: each odd
/// cycle loses one of its lightest edges and the joining edge is cut by
/// flipping one side.
pub fn build_joined_wheels(i: u64, ni: u64, j: u64, nj: u64) -> Result<Gadget> {
    require_critical(i, ni)?;
    require_critical(j, nj)?;
    if i >= j {
        return Err(Error::Contract(format!("joined wheels need i < j, got {i}, {j}")));
    }
    let (a, b) = (ni as usize, nj as usize);
    let mut edges = cycle_edges(i, a);
    edges.extend(cycle_edges(j, b).into_iter().map(|(u, v, m)| (u + a, v + a, m)));
    edges.push((0, a, 1));
    let graph = Multigraph::from_edges(a + b, edges)?;
    let mut sides = cycle_witness(a);
    sides.extend(cycle_witness(b).into_iter().map(|s| !s));
    Ok(Gadget {
        kind: GadgetKind::Joined,
        graph,
        opt_value: critical_cycle_opt(i, ni) + critical_cycle_opt(j, nj) + 1,
        witness: Cut::from_sides(sides),
        leaves: 0,
    })
}

/// A critical cycle whose special node carries one pendant leaf.
pub fn build_leftover_wheel(i: u64, n: u64) -> Result<Gadget> {
    require_critical(i, n)?;
    let a = n as usize;
    let mut edges = cycle_edges(i, a);
    edges.push((0, a, 1));
    let graph = Multigraph::from_edges(a + 1, edges)?;
    let mut sides = cycle_witness(a);
    sides.push(true);
    Ok(Gadget {
        kind: GadgetKind::LeftoverWheel,
        graph,
        opt_value: critical_cycle_opt(i, n) + 1,
        witness: Cut::from_sides(sides),
        leaves: 1,
    })
}

/// `count/2` disjoint unit edges on `count` degree-1 vertices.
pub fn build_matching(count: u64) -> Result<Gadget> {
    if count % 2 == 1 {
        return Err(Error::Contract(format!("matching needs an even count, got {count}")));
    }
    let c = count as usize;
    let graph = Multigraph::from_edges(c, (0..c / 2).map(|k| (2 * k, 2 * k + 1, 1)))?;
    Ok(Gadget {
        kind: GadgetKind::Matching,
        opt_value: count / 2,
        graph,
        witness: Cut::from_sides((0..c).map(|v| v % 2 == 1).collect()),
        leaves: count,
    })
}
