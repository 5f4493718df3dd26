use alloc::format;
use alloc::string::String;
use serde::Serialize;

use crate::{Cut, Error, Result};

/// The algorithms offered by this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Exact,
    Greedy,
    Local,
    DensePtas,
    SplitPtas,
    Gw,
    BetaGt2,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Exact,
        Algorithm::Greedy,
        Algorithm::Local,
        Algorithm::DensePtas,
        Algorithm::SplitPtas,
        Algorithm::Gw,
        Algorithm::BetaGt2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Greedy => "greedy",
            Algorithm::Local => "local",
            Algorithm::DensePtas => "dense-ptas",
            Algorithm::SplitPtas => "split-ptas",
            Algorithm::Gw => "gw",
            Algorithm::BetaGt2 => "beta-gt2",
        }
    }
}

impl core::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown algorithm `{s}`")))
    }
}

/// Echo of the inputs that influenced a run.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct AlgoParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restarts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_limit: Option<usize>,
}

/// Extra output of the split PTAS.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitReport {
    pub tau: f64,
    pub x: f64,
    pub eps_prime: f64,
    /// `[lo, hi]`, the degree interval handed to the dense PTAS.
    pub lo_degree: u64,
    pub hi_degree: u64,
    pub high_vertices: usize,
    /// Whether the degree histogram matches the parameters up to one
    /// parity-adjusted vertex.
    pub histogram_consistent: bool,
    pub strategy: &'static str,
}

/// Extra output of the SDP relaxation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SdpReport {
    pub rank: usize,
    pub sweeps: usize,
    /// Relaxation objective `Σ mult (1 − ⟨v_u, v_v⟩)/2` at the final vectors.
    pub sdp_value: f64,
    /// Dual-feasible bound `≥ OPT`, when computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgoResult {
    pub algorithm: Algorithm,
    pub value: u64,
    pub cut: Cut,
    pub params: AlgoParams,
    pub certified_optimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdp: Option<SdpReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl AlgoResult {
    pub(crate) fn new(algorithm: Algorithm, value: u64, cut: Cut, params: AlgoParams) -> Self {
        Self {
            algorithm,
            value,
            cut,
            params,
            certified_optimal: false,
            sdp: None,
            split: None,
            note: None,
        }
    }

    /// The SDP upper bound if one was certified.
    pub fn upper_bound(&self) -> Option<f64> {
        self.sdp.as_ref().and_then(|s| s.upper_bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("simplex".parse::<Algorithm>().is_err());
    }
}
