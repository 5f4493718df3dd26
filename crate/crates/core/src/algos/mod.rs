//! MAX-CUT algorithms on multigraphs. Self-loops never count toward any
//! objective.

mod beta_gt2;
mod dense;
mod exact;
mod greedy;
mod local;
mod result;
mod sdp;
mod split;
mod state;

pub use beta_gt2::{beta_gt2_algorithm, mu_fraction};
pub use dense::{dense_ptas, sample_size, DENSE_SAMPLE_CAP};
pub use exact::{exact_maxcut, exact_maxcut_with_limit, DEFAULT_ORACLE_LIMIT};
pub use greedy::greedy_cut;
pub use local::{is_one_flip_optimal, local_search};
pub use result::{AlgoParams, AlgoResult, Algorithm, SdpReport, SplitReport};
pub use sdp::{gw_sdp, DEFAULT_RESTARTS, UB_CERTIFICATE_MAX_N};
pub use split::split_ptas;

use crate::Cut;

/// `true` if `(va, a)` beats `(vb, b)`: higher value, ties to the
/// lexicographically smaller cut.
pub(crate) fn better(va: u64, a: &Cut, vb: u64, b: &Cut) -> bool {
    va > vb || (va == vb && a.sides() < b.sides())
}
