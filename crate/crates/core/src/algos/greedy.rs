use super::result::{AlgoParams, AlgoResult, Algorithm};
use crate::graph::Adjacency;
use crate::{Cut, Multigraph, Result};

/// Places vertices in id order on the side that cuts more multiplicity to
/// the already-placed neighbors; ties go to side 0.
pub fn greedy_cut(g: &Multigraph) -> Result<AlgoResult> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut cut = Cut::new(n);
    let mut placed = alloc::vec![false; n];
    place_greedily(&adj, &mut cut, &mut placed, 0..n);
    let value = g.cut_value(&cut)?;
    Ok(AlgoResult::new(Algorithm::Greedy, value, cut, AlgoParams::default()))
}

/// Greedy placement of `order` given the vertices already marked `placed`.
pub(crate) fn place_greedily(
    adj: &Adjacency,
    cut: &mut Cut,
    placed: &mut [bool],
    order: impl IntoIterator<Item = usize>,
) {
    for v in order {
        if placed[v] {
            continue;
        }
        let (mut to0, mut to1) = (0u64, 0u64);
        for &(w, m) in adj.neighbors(v) {
            if placed[w] {
                if cut.side(w) {
                    to1 += m;
                } else {
                    to0 += m;
                }
            }
        }
        cut.set(v, to0 > to1);
        placed[v] = true;
    }
}
