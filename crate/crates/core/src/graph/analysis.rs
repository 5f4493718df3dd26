use alloc::format;
use alloc::vec::Vec;
use serde::Serialize;

use crate::{Error, Multigraph, Result};

/// A closed degree range `[a, b]` with `1 ≤ a ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeInterval {
    a: u64,
    b: u64,
}

impl DegreeInterval {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b < a {
            return Err(Error::Domain(format!("invalid degree interval [{a}, {b}]")));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn contains(&self, d: u64) -> bool {
        self.a <= d && d <= self.b
    }
}

impl Multigraph {
    /// Vertices whose degree lies in `iv`, in increasing id order.
    pub fn vertices_in(&self, iv: DegreeInterval) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| iv.contains(self.degree(v)))
            .collect()
    }

    /// `G_{[a,b]}`: the subgraph induced by vertices with degree in `[a, b]`
    /// (degrees measured in `self`), with `mapping[new] = old`.
    pub fn induced_interval_subgraph(&self, iv: DegreeInterval) -> (Multigraph, Vec<usize>) {
        let keep = self.vertices_in(iv);
        self.induced_subgraph(&keep)
            .expect("vertices_in yields distinct in-range ids")
    }

    /// `Σ_{edges} mult / ((D_u + D̄)(D_v + D̄))` with `D̄` the average degree.
    pub fn core_strength(&self) -> Result<f64> {
        if self.total_multiplicity() == 0 {
            return Err(Error::EmptyGraph);
        }
        let avg = 2.0 * self.total_multiplicity() as f64 / self.vertex_count() as f64;
        let d = |v: usize| self.degree(v) as f64 + avg;
        Ok(self
            .edges()
            .iter()
            .map(|e| e.mult as f64 / (d(e.u) * d(e.v)))
            .sum())
    }
}
