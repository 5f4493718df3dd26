use alloc::format;
use serde::Serialize;

use crate::numeric::{exp, floor_tol, powf};
use crate::{Error, Result};

/// Largest `α/β` accepted, so that `Δ = ⌊e^{α/β}⌋` stays an exact `f64` integer.
const MAX_LOG_DEGREE: f64 = 36.0;
/// `e^α` must fit in `u128` for the exact counts.
const MAX_ALPHA: f64 = 88.0;

/// The pair `(α, β)` of a power-law degree sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerLawParams {
    alpha: f64,
    beta: f64,
}

impl PowerLawParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::Domain(format!("beta must be positive, got {beta}")));
        }
        if alpha > MAX_ALPHA || alpha / beta > MAX_LOG_DEGREE {
            return Err(Error::Domain(format!(
                "(alpha, beta) = ({alpha}, {beta}) exceeds the representable range"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `e^α`, the degree-1 count before flooring.
    pub fn scale(&self) -> f64 {
        exp(self.alpha)
    }

    /// `Δ = ⌊e^{α/β}⌋`; at least 1 for valid parameters.
    pub fn max_degree(&self) -> u64 {
        (floor_tol(exp(self.alpha / self.beta)) as u64).max(1)
    }

    /// `y_i = ⌊e^α / i^β⌋` for `1 ≤ i ≤ Δ`.
    pub fn degree_count(&self, i: u64) -> Result<u128> {
        let hi = self.max_degree();
        if i == 0 || i > hi {
            return Err(Error::Range {
                what: "degree",
                value: i,
                lo: 1,
                hi,
            });
        }
        Ok(self.count_unchecked(i))
    }

    /// Same as [`degree_count`](Self::degree_count) without the range check;
    /// `i` past `Δ` may still yield a positive count near the boundary.
    pub(crate) fn count_unchecked(&self, i: u64) -> u128 {
        self.count_with_scale(self.scale(), i)
    }

    pub(crate) fn count_with_scale(&self, scale: f64, i: u64) -> u128 {
        let v = floor_tol(scale / powf(i as f64, self.beta));
        if v <= 0.0 {
            0
        } else {
            v as u128
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use libm::log;

    #[test]
    fn max_degree_examples() {
        assert_eq!(PowerLawParams::new(log(100.0), 2.0).unwrap().max_degree(), 10);
        assert_eq!(PowerLawParams::new(log(100.0), 1.0).unwrap().max_degree(), 100);
        assert_eq!(PowerLawParams::new(0.1, 10.0).unwrap().max_degree(), 1);
    }

    #[test]
    fn degree_count_examples() {
        let p = PowerLawParams::new(log(100.0), 2.0).unwrap();
        assert_eq!(p.degree_count(1).unwrap(), 100);
        assert_eq!(p.degree_count(2).unwrap(), 25);
        assert_eq!(p.degree_count(3).unwrap(), 11);
        assert_eq!(p.degree_count(10).unwrap(), 1);
        assert!(matches!(p.degree_count(0), Err(Error::Range { .. })));
        assert!(matches!(p.degree_count(11), Err(Error::Range { .. })));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(PowerLawParams::new(0.0, 1.0).is_err());
        assert!(PowerLawParams::new(1.0, 0.0).is_err());
        assert!(PowerLawParams::new(f64::NAN, 1.0).is_err());
        assert!(PowerLawParams::new(30.0, 0.5).is_err());
    }
}
