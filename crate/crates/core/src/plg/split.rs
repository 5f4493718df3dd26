use alloc::format;
use serde::Serialize;

use crate::numeric::powf;
use crate::{Error, Result};

/// Parameters of the split PTAS for `1 < β < 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitParams {
    pub tau: f64,
    /// Fraction of `Δ` below which vertices are placed greedily.
    pub x: f64,
    /// Accuracy handed to the dense PTAS on the high-degree part.
    pub eps_prime: f64,
}

/// `τ(ε) = 4(1 + ε)/ε`.
pub fn tau(eps: f64) -> Result<f64> {
    if !(eps > 0.0) {
        return Err(Error::Domain(format!("eps must be positive, got {eps}")));
    }
    Ok(4.0 * (1.0 + eps) / eps)
}

/// `x = (2τ)^{−1/(2−β)}` and
/// `ε′ = (½ε/(1+ε)) / ((4(2−β)/(β−1)²)·(2τ^{(2−β)/(β−1)} − 1)²)`.
pub fn split_params(eps: f64, beta: f64) -> Result<SplitParams> {
    let tau = tau(eps)?;
    if !(beta > 1.0 && beta < 2.0) {
        return Err(Error::Domain(format!("split PTAS needs 1 < beta < 2, got {beta}")));
    }
    let x = powf(2.0 * tau, -1.0 / (2.0 - beta));
    let k = 4.0 * (2.0 - beta) / ((beta - 1.0) * (beta - 1.0));
    let t = 2.0 * powf(tau, (2.0 - beta) / (beta - 1.0)) - 1.0;
    let eps_prime = (0.5 * eps / (1.0 + eps)) / (k * t * t);
    Ok(SplitParams { tau, x, eps_prime })
}
