//! Analytics of `(α, β)` power-law degree sequences.
//!
//! A power-law graph (PLG) with parameters `(α, β)` has maximum degree
//! `Δ = ⌊e^{α/β}⌋` and exactly `y_i = ⌊e^α / i^β⌋` vertices of degree `i`
//! for `i = 1..=Δ`. Everything here is a pure function of its inputs.

mod estimates;
mod functional;
mod intervals;
mod params;
mod ratios;
mod split;
mod zeta;

pub use estimates::{edge_count_estimate, node_count_estimate};
pub use functional::{
    classify_growth, functional_conditions_check, functional_x, FunctionalRatios, FunctionalSpec,
    GrowthRegime,
};
pub use intervals::{
    interval_size_bounds, interval_size_exact, interval_sums, interval_volume_bounds,
    interval_volume_exact, IntervalBounds, IntervalSums,
};
pub use params::PowerLawParams;
pub use ratios::{
    core_strength_bound, gw_ratio_bound, hardness_ratio, GwBoundInputs, ALPHA_GW,
};
pub use split::{split_params, tau, SplitParams};
pub use zeta::zeta;
