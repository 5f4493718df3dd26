use alloc::format;

use crate::numeric::powf;
use crate::{Error, Result};

const MAX_TERMS: u64 = 1 << 30;

/// Riemann ζ(β) for real `β > 1`, with absolute error at most `tol`.
///
/// Sums the first `K` terms and brackets the tail `Σ_{i>K} i^{-β}` between
/// `∫_K^∞ t^{-β} dt − K^{-β}/2` (trapezoid, convexity) and
/// `∫_{K+1/2}^∞ t^{-β} dt` (midpoint, convexity). `K` is doubled until half
/// the bracket width is below `tol`; the midpoint of the bracket is returned.
pub fn zeta(beta: f64, tol: f64) -> Result<f64> {
    if !beta.is_finite() || beta <= 1.0 {
        return Err(Error::Divergence(beta));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let tail = |x: f64| powf(x, 1.0 - beta) / (beta - 1.0);
    let mut partial = 0.0;
    let mut summed: u64 = 0;
    let mut k: u64 = 16;
    loop {
        // Add terms summed+1..=k, smallest first.
        let mut chunk = 0.0;
        for i in ((summed + 1)..=k).rev() {
            chunk += powf(i as f64, -beta);
        }
        partial += chunk;
        summed = k;
        let kf = k as f64;
        let lo = tail(kf) - 0.5 * powf(kf, -beta);
        let hi = tail(kf + 0.5);
        if 0.5 * (hi - lo) <= tol {
            return Ok(partial + 0.5 * (lo + hi));
        }
        if k >= MAX_TERMS {
            return Err(Error::Domain(format!(
                "zeta({beta}) cannot reach tolerance {tol} within {MAX_TERMS} terms"
            )));
        }
        k *= 2;
    }
}
