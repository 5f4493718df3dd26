use super::result::{AlgoParams, AlgoResult, Algorithm};
use super::state::CutState;
use crate::{Cut, Error, Multigraph, Result};

/// Single-vertex moves, scanning ids in order and taking every improving
/// move, until the cut is 1-flip optimal.
pub fn local_search(g: &Multigraph, start: Cut) -> Result<AlgoResult> {
    if start.len() != g.vertex_count() {
        return Err(Error::Contract("start cut does not match the graph".into()));
    }
    let cut = polish(g, start);
    let value = g.cut_value(&cut)?;
    Ok(AlgoResult::new(Algorithm::Local, value, cut, AlgoParams::default()))
}

pub(crate) fn polish(g: &Multigraph, start: Cut) -> Cut {
    let adj = g.adjacency();
    let mut st = CutState::new(&adj, start);
    st.improve();
    st.into_cut()
}

/// No single vertex move increases the value (checked by recomputation).
pub fn is_one_flip_optimal(g: &Multigraph, cut: &Cut) -> bool {
    let Ok(base) = g.cut_value(cut) else {
        return false;
    };
    let mut c = cut.clone();
    (0..cut.len()).all(|v| {
        c.flip(v);
        let ok = g.cut_value(&c).map_or(false, |x| x <= base);
        c.flip(v);
        ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algos::exact_maxcut;
    use alloc::vec::Vec;

    fn complete(n: usize) -> Multigraph {
        Multigraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j, 1)))).unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, 1))).unwrap()
    }

    #[test]
    fn k4_from_one_side() {
        let g = complete(4);
        let r = local_search(&g, Cut::new(4)).unwrap();
        assert_eq!(r.value, 4);
        assert!(is_one_flip_optimal(&g, &r.cut));
    }

    #[test]
    fn fixpoint_unchanged() {
        let g = complete(4);
        let opt = exact_maxcut(&g).unwrap();
        let r = local_search(&g, opt.cut.clone()).unwrap();
        assert_eq!(r.value, opt.value);
        assert_eq!(r.cut, opt.cut);
    }

    #[test]
    fn c5_all_normalized_starts() {
        let g = cycle(5);
        for mask in 0u32..16 {
            let sides: Vec<bool> = (0..5).map(|i| i > 0 && (mask >> (i - 1)) & 1 == 1).collect();
            let r = local_search(&g, Cut::from_sides(sides)).unwrap();
            assert_eq!(r.value, 4, "start {mask:04b}");
        }
    }
}
