use alloc::format;
use alloc::vec::Vec;
use serde::Serialize;

use super::gadgets::Gadget;
use crate::algos::exact_maxcut_with_limit;
use crate::{Error, Multigraph, Result};

/// Largest gadget certified by exhaustive search.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertMethod {
    /// The loop-free part is 2-colorable, so every non-loop edge is cut.
    Bipartite,
    /// Exhaustive search agrees with the claimed optimum.
    BruteForce,
    /// Each odd cycle must leave one edge uncut and the witness loses exactly
    /// one lightest edge per odd cycle.
    OddCycle,
}

impl CertMethod {
    pub fn tag(self) -> &'static str {
        match self {
            CertMethod::Bipartite => "bipartite",
            CertMethod::BruteForce => "brute-force",
            CertMethod::OddCycle => "odd-cycle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub method: CertMethod,
    pub value: u64,
}

/// 2-coloring of the loop-free part, if one exists.
pub fn two_coloring(g: &Multigraph) -> Option<Vec<bool>> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = alloc::vec![None; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        stack.push(s);
        while let Some(v) = stack.pop() {
            let c = color[v].unwrap_or(false);
            for &(w, _) in adj.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(x) if x == c => return None,
                    _ => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

/// Confirms the gadget's claimed optimum and that its witness attains it.
pub fn certify(g: &Gadget) -> Result<Certification> {
    let witness = g.graph.cut_value(&g.witness)?;
    if witness != g.opt_value {
        return Err(Error::Contract(format!(
            "{} witness cuts {witness}, claimed optimum {}",
            g.kind.tag(),
            g.opt_value
        )));
    }
    let (method, value) = if two_coloring(&g.graph).is_some() {
        let v = g.graph.total_multiplicity() - g.graph.self_loop_total();
        (CertMethod::Bipartite, v)
    } else if g.graph.vertex_count() <= BRUTE_FORCE_MAX_VERTICES {
        let v = exact_maxcut_with_limit(&g.graph, BRUTE_FORCE_MAX_VERTICES)?.value;
        (CertMethod::BruteForce, v)
    } else {
        (CertMethod::OddCycle, witness)
    };
    if value != g.opt_value {
        return Err(Error::Contract(format!(
            "{} certified at {value}, claimed {}",
            g.kind.tag(),
            g.opt_value
        )));
    }
    Ok(Certification { method, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::gadgets::*;

    #[test]
    fn methods() {
        let c = certify(&build_multipath(4, 30).unwrap()).unwrap();
        assert_eq!(c.method, CertMethod::Bipartite);
        let c = certify(&build_joined_wheels(5, 3, 7, 3).unwrap()).unwrap();
        assert_eq!((c.method, c.value), (CertMethod::BruteForce, 13));
        let c = certify(&build_wheel(6, 31).unwrap()).unwrap();
        assert_eq!(c.method, CertMethod::OddCycle);
        let c = certify(&build_wheel(6, 1).unwrap()).unwrap();
        assert_eq!((c.method, c.value), (CertMethod::Bipartite, 0));
    }

    #[test]
    fn detects_wrong_claim() {
        let mut g = build_wheel(4, 5).unwrap();
        g.opt_value = 10;
        assert!(certify(&g).is_err());
    }
}
