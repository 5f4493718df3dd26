use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Cut, Error, Result};

/// An edge `{u, v}` with `u ≤ v` and its multiplicity; `u == v` is a self-loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub mult: u64,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// An immutable undirected multigraph on vertices `0..n`.
///
/// Edges are kept in canonical form: `u ≤ v`, sorted by `(u, v)`, one entry
/// per vertex pair with merged multiplicity. A self-loop adds 2 to the degree
/// of its vertex and never crosses a cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    degrees: Vec<u64>,
    total: u64,
    loops: u64,
}

impl Multigraph {
    /// Builds a graph, merging repeated vertex pairs. Zero multiplicities are
    /// dropped.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        Self::build(n, edges, false)
    }

    /// Like [`from_edges`](Self::from_edges) but rejects a vertex pair that
    /// appears twice.
    pub fn from_edges_strict<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        Self::build(n, edges, true)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            degrees: vec![0; n],
            total: 0,
            loops: 0,
        }
    }

    fn build<I>(n: usize, edges: I, strict: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut raw: Vec<Edge> = Vec::new();
        for (a, b, mult) in edges {
            if a >= n || b >= n {
                return Err(Error::Contract(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if mult == 0 {
                continue;
            }
            raw.push(Edge {
                u: a.min(b),
                v: a.max(b),
                mult,
            });
        }
        raw.sort_unstable_by_key(|e| (e.u, e.v));
        let mut merged: Vec<Edge> = Vec::with_capacity(raw.len());
        for e in raw {
            match merged.last_mut() {
                Some(last) if last.u == e.u && last.v == e.v => {
                    if strict {
                        return Err(Error::Contract(format!(
                            "duplicate edge ({}, {})",
                            e.u, e.v
                        )));
                    }
                    last.mult = last.mult.checked_add(e.mult).ok_or(Error::Overflow)?;
                }
                _ => merged.push(e),
            }
        }
        Self::from_canonical(n, merged)
    }

    fn from_canonical(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut degrees = vec![0u64; n];
        let mut total = 0u64;
        let mut loops = 0u64;
        for e in &edges {
            total = total.checked_add(e.mult).ok_or(Error::Overflow)?;
            if e.is_loop() {
                loops += e.mult;
                degrees[e.u] = degrees[e.u]
                    .checked_add(2 * e.mult)
                    .ok_or(Error::Overflow)?;
            } else {
                degrees[e.u] += e.mult;
                degrees[e.v] += e.mult;
            }
        }
        Ok(Self {
            n,
            edges,
            degrees,
            total,
            loops,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Canonical edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of distinct vertex pairs carrying an edge.
    pub fn distinct_edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `Σ mult` over all edges, self-loops included.
    pub fn total_multiplicity(&self) -> u64 {
        self.total
    }

    /// `Σ mult` over self-loops.
    pub fn self_loop_total(&self) -> u64 {
        self.loops
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn max_degree(&self) -> u64 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicity of the pair `{u, v}`, 0 when absent.
    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by_key(&key, |e| (e.u, e.v))
            .map(|i| self.edges[i].mult)
            .unwrap_or(0)
    }

    pub fn degree_histogram(&self) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for &d in &self.degrees {
            *h.entry(d).or_insert(0) += 1;
        }
        h
    }

    pub fn is_regular(&self, d: u64) -> bool {
        self.degrees.iter().all(|&x| x == d)
    }

    /// Σ mult over edges whose endpoints lie on different sides.
    pub fn cut_value(&self, cut: &Cut) -> Result<u64> {
        if cut.len() != self.n {
            return Err(Error::Contract(format!(
                "cut has {} entries, graph has {} vertices",
                cut.len(),
                self.n
            )));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| cut.side(e.u) != cut.side(e.v))
            .map(|e| e.mult)
            .sum())
    }

    /// The subgraph induced by `vertices` (distinct ids, in the order given),
    /// renumbered `0..k`, with `mapping[new] = old`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Multigraph, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            if old >= self.n || index[old] != usize::MAX {
                return Err(Error::Contract(format!(
                    "vertex {old} repeated or out of range"
                )));
            }
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| {
                let (a, b) = (index[e.u], index[e.v]);
                Edge {
                    u: a.min(b),
                    v: a.max(b),
                    mult: e.mult,
                }
            });
        let mut edges: Vec<Edge> = edges.collect();
        edges.sort_unstable_by_key(|e| (e.u, e.v));
        let sub = Self::from_canonical(vertices.len(), edges)?;
        Ok((sub, vertices.to_vec()))
    }

    /// Loop-free neighbor lists in compressed form.
    pub fn adjacency(&self) -> Adjacency {
        let mut offsets = vec![0usize; self.n + 1];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            offsets[e.u + 1] += 1;
            offsets[e.v + 1] += 1;
        }
        for i in 0..self.n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut nbrs = vec![(0usize, 0u64); offsets[self.n]];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            nbrs[fill[e.u]] = (e.v, e.mult);
            fill[e.u] += 1;
            nbrs[fill[e.v]] = (e.u, e.mult);
            fill[e.v] += 1;
        }
        Adjacency { offsets, nbrs }
    }

    /// Connected components as `(labels, count)`; labels are assigned in
    /// order of the smallest vertex of each component.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(w, _) in adj.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }
}

/// Compressed neighbor lists: for each vertex, `(neighbor, multiplicity)`
/// pairs, self-loops omitted.
#[derive(Debug, Clone)]
pub struct Adjacency {
    offsets: Vec<usize>,
    nbrs: Vec<(usize, u64)>,
}

impl Adjacency {
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, u64)] {
        &self.nbrs[self.offsets[v]..self.offsets[v + 1]]
    }
}
