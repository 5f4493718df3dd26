//! Embedding 3-regular MAX-CUT instances into power-law hosts.
//!
//! Every degree class of the target sequence other than 1 and 3 is realized
//! by a gadget whose maximum cut is known and certified; the 3-regular input
//! (padded with disjoint `K_4`) supplies the degree-3 vertices and a
//! matching absorbs the remaining degree-1 budget. The maximum cut of the
//! host is then the input's maximum cut plus a fixed offset.

mod certify;
mod embed;
mod gadgets;
mod thresholds;

pub use certify::{certify, two_coloring, CertMethod, Certification, BRUTE_FORCE_MAX_VERTICES};
pub use embed::{
    choose_alpha, choose_alpha_with_k, describe, embed, embed_with, optimal_gadget_cut,
    pad_with_k4, EmbedOptions, EmbedStrategy, Embedding, EmbeddingReport, GadgetPlan,
    GadgetRecord, PlanEntry, DEFAULT_HOST_BUDGET,
};
pub use gadgets::{
    build_joined_wheels, build_leftover_wheel, build_matching, build_multipath, build_wheel,
    Gadget, GadgetKind,
};
pub use thresholds::{
    decision_thresholds, lift_thresholds, projected_offset, DecisionThresholds, VERTICES_PER_UNIT,
};
