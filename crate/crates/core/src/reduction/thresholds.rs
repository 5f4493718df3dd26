use alloc::format;
use serde::Serialize;

use super::embed::choose_alpha;
use crate::plg::{interval_sums, PowerLawParams};
use crate::{Error, Result};

/// Vertices of the E3-MAX-CUT instance per unit of `n`.
pub const VERTICES_PER_UNIT: u64 = 104;
const YES_PER_UNIT: f64 = 152.0;
const NO_PER_UNIT: f64 = 151.0;

/// Gap thresholds for 3-regular instances on `104·n` vertices: deciding
/// whether the maximum cut exceeds `(152 − ε)n` or stays below `(151 + ε)n`
/// is NP-hard.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecisionThresholds {
    pub n_param: u64,
    pub eps: f64,
    pub yes_value: f64,
    pub no_value: f64,
}

pub fn decision_thresholds(n_param: u64, eps: f64) -> Result<DecisionThresholds> {
    if n_param == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if !(eps > 0.0 && eps < 1.0 / 302.0) {
        return Err(Error::Domain(format!("eps must lie in (0, 1/302), got {eps}")));
    }
    let n = n_param as f64;
    Ok(DecisionThresholds {
        n_param,
        eps,
        yes_value: (YES_PER_UNIT - eps) * n,
        no_value: (NO_PER_UNIT + eps) * n,
    })
}

/// Thresholds for the embedded instance: both shift by the gadget offset.
pub fn lift_thresholds(t: &DecisionThresholds, offset: u64) -> (f64, f64) {
    (t.yes_value + offset as f64, t.no_value + offset as f64)
}

/// Gadget offset of the multipath embedding of a `104·n`-vertex instance,
/// computed from exact degree sums without building the host:
/// `⌊(vol([1, Δ]) − 3·y_3)/2⌋`.
pub fn projected_offset(n_param: u64, beta: f64) -> Result<u128> {
    let big_n = n_param
        .checked_mul(VERTICES_PER_UNIT)
        .ok_or(Error::Overflow)?;
    let (alpha, _) = choose_alpha(big_n, beta)?;
    let p = PowerLawParams::new(alpha, beta)?;
    let vol = interval_sums(&p, 1, p.max_degree())?.volume;
    let y3 = if p.max_degree() >= 3 { p.degree_count(3)? } else { 0 };
    Ok((vol - 3 * y3) / 2)
}
