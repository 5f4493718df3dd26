use alloc::format;
use serde::Serialize;

use super::zeta;
use crate::numeric::{exp, powf};
use crate::{Error, Result};

/// Goemans–Williamson approximation constant.
pub const ALPHA_GW: f64 = 0.879;

const ZETA_TOL: f64 = 1e-12;

/// Inputs of the refined `β > 2` ratio bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GwBoundInputs {
    pub alpha_gw: f64,
    /// Fraction of the `e^α` degree-1 vertices matched to another degree-1
    /// vertex.
    pub mu: f64,
}

impl GwBoundInputs {
    pub fn new(mu: f64) -> Result<Self> {
        Self::with_alpha_gw(ALPHA_GW, mu)
    }

    pub fn with_alpha_gw(alpha_gw: f64, mu: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&mu) {
            return Err(Error::Domain(format!("mu must lie in [0, 1], got {mu}")));
        }
        if !(alpha_gw > 0.0 && alpha_gw <= 1.0) {
            return Err(Error::Domain(format!("alpha_gw must lie in (0, 1], got {alpha_gw}")));
        }
        Ok(Self { alpha_gw, mu })
    }
}

impl Default for GwBoundInputs {
    fn default() -> Self {
        Self { alpha_gw: ALPHA_GW, mu: 1.0 }
    }
}

fn require_beta_gt2(beta: f64) -> Result<f64> {
    if !(beta > 2.0) || !beta.is_finite() {
        return Err(Error::Domain(format!("beta must exceed 2, got {beta}")));
    }
    zeta(beta - 1.0, ZETA_TOL)
}

/// Inverse approximation ratio guaranteed by GW on the degree-≥2 core plus
/// opposite-side leaves: `min(1, (α_GW(Z − c) + c)/Z)` with `Z = ½ζ(β−1)`
/// and `c = 1 − μ/2`.
pub fn gw_ratio_bound(beta: f64, g: GwBoundInputs) -> Result<f64> {
    Ok(gw_ratio_uncapped(beta, g)?.min(1.0))
}

pub(crate) fn gw_ratio_uncapped(beta: f64, g: GwBoundInputs) -> Result<f64> {
    let z = 0.5 * require_beta_gt2(beta)?;
    let c = 1.0 - 0.5 * g.mu;
    Ok((g.alpha_gw * (z - c) + c) / z)
}

/// Inapproximability threshold for MAX-CUT on `(α, β)`-PLGs with `β > 2`:
/// `((3^β ζ(β−1) − 3)·52 + 152) / ((3^β ζ(β−1) − 3)·52 + 151)`.
pub fn hardness_ratio(beta: f64) -> Result<f64> {
    let z = require_beta_gt2(beta)?;
    let base = (powf(3.0, beta) * z - 3.0) * 52.0;
    Ok((base + 152.0) / (base + 151.0))
}

/// `α³ / e^α`, the `β = 1` core-strength bound.
pub fn core_strength_bound(alpha: f64) -> f64 {
    alpha * alpha * alpha / exp(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hardness_values() {
        // mpmath oracles
        assert!((hardness_ratio(3.0).unwrap() - 1.000_433_935_975_108_8).abs() < 1e-12);
        assert!((hardness_ratio(2.1).unwrap() - 1.000_181_036_742_802_9).abs() < 1e-11);
        assert!(hardness_ratio(2.0).is_err());
    }

    #[test]
    fn gw_values() {
        let b = gw_ratio_bound(3.0, GwBoundInputs::new(1.0).unwrap()).unwrap();
        assert!((b - 0.952_559_179_324_337_2).abs() < 1e-12);
        let g0 = GwBoundInputs::new(0.0).unwrap();
        assert_eq!(gw_ratio_bound(3.0, g0).unwrap(), 1.0);
        assert!((gw_ratio_uncapped(3.0, g0).unwrap() - 1.026_118_358_648_674_4).abs() < 1e-12);
        assert!(gw_ratio_bound(2.0, g0).is_err());
        assert!(GwBoundInputs::new(1.5).is_err());
    }

    #[test]
    fn core_bound_values() {
        assert!((core_strength_bound(8.0) - 0.171_756_865_486_086_06).abs() < 1e-15);
        assert!((core_strength_bound(12.0) - 0.010_617_198_946_551_146).abs() < 1e-16);
        let mut prev = core_strength_bound(3.0);
        for k in 1..100 {
            let v = core_strength_bound(3.0 + k as f64 * 0.25);
            assert!(v < prev);
            prev = v;
        }
    }

    proptest! {
        #[test]
        fn hardness_exceeds_one(beta in 2.01f64..8.0) {
            prop_assert!(hardness_ratio(beta).unwrap() > 1.0);
        }

        #[test]
        fn gw_at_least_alpha_gw_and_monotone_in_mu(beta in 2.05f64..8.0, mu in 0.0f64..1.0) {
            let g = GwBoundInputs::new(mu).unwrap();
            let one = GwBoundInputs::new(1.0).unwrap();
            prop_assert!(gw_ratio_bound(beta, g).unwrap() >= ALPHA_GW);
            prop_assert!(gw_ratio_uncapped(beta, g).unwrap() >= gw_ratio_uncapped(beta, one).unwrap() - 1e-15);
            let g2 = GwBoundInputs::new((mu + 0.1).min(1.0)).unwrap();
            prop_assert!(gw_ratio_uncapped(beta, g2).unwrap() <= gw_ratio_uncapped(beta, g).unwrap() + 1e-15);
        }
    }
}
