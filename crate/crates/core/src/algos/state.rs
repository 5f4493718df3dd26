use alloc::vec::Vec;

use crate::graph::Adjacency;
use crate::Cut;

/// A cut with its value and per-vertex flip gains, updated in `O(deg)` per
/// flip.
pub(crate) struct CutState<'a> {
    adj: &'a Adjacency,
    cut: Cut,
    /// `gain[v]`: change of the cut value if `v` switches side.
    gain: Vec<i64>,
    value: u64,
}

impl<'a> CutState<'a> {
    pub fn new(adj: &'a Adjacency, cut: Cut) -> Self {
        let n = adj.vertex_count();
        let mut gain = alloc::vec![0i64; n];
        let mut twice = 0u64;
        for (v, g) in gain.iter_mut().enumerate() {
            for &(w, m) in adj.neighbors(v) {
                if cut.side(v) == cut.side(w) {
                    *g += m as i64;
                } else {
                    *g -= m as i64;
                    twice += m;
                }
            }
        }
        Self {
            adj,
            cut,
            gain,
            value: twice / 2,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    #[cfg(test)]
    pub fn gain(&self, v: usize) -> i64 {
        self.gain[v]
    }

    pub fn side(&self, v: usize) -> bool {
        self.cut.side(v)
    }

    pub fn cut(&self) -> &Cut {
        &self.cut
    }

    pub fn into_cut(self) -> Cut {
        self.cut
    }

    pub fn flip(&mut self, v: usize) {
        self.value = (self.value as i64 + self.gain[v]) as u64;
        let s = self.cut.side(v);
        for &(w, m) in self.adj.neighbors(v) {
            let d = 2 * m as i64;
            if self.cut.side(w) == s {
                self.gain[w] -= d;
            } else {
                self.gain[w] += d;
            }
        }
        self.gain[v] = -self.gain[v];
        self.cut.flip(v);
    }

    /// First-improvement single flips until none helps.
    pub fn improve(&mut self) {
        let n = self.gain.len();
        loop {
            let mut changed = false;
            for v in 0..n {
                if self.gain[v] > 0 {
                    self.flip(v);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
}
