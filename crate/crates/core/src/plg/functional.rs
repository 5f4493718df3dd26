//! The functional case `β_f = 2 − 1/f(α)`, approaching 2 from below.

use alloc::format;
use alloc::string::String;
use serde::Serialize;

use super::intervals::sums_unchecked;
use super::PowerLawParams;
use crate::numeric::{ceil_tol, floor_tol, ln, sqrt};
use crate::{Error, Result};

/// A growth function `f` with `f(α) > 1` on the evaluated points.
#[derive(Clone)]
pub struct FunctionalSpec {
    name: String,
    f: fn(f64) -> f64,
}

impl core::fmt::Debug for FunctionalSpec {
    fn fmt(&self, fm: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        fm.debug_struct("FunctionalSpec").field("name", &self.name).finish()
    }
}

impl FunctionalSpec {
    pub fn new(name: impl Into<String>, f: fn(f64) -> f64) -> Self {
        Self { name: name.into(), f }
    }

    /// `f(α) = √α`.
    pub fn sqrt() -> Self {
        Self::new("sqrt", sqrt)
    }

    /// `f(α) = ln α`.
    pub fn ln() -> Self {
        Self::new("ln", ln)
    }

    /// `f(α) = α`.
    pub fn linear() -> Self {
        Self::new("linear", |a| a)
    }

    /// `f(α) = α²`.
    pub fn square() -> Self {
        Self::new("square", |a| a * a)
    }

    /// Looks up one of the named built-ins.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "sqrt" => Ok(Self::sqrt()),
            "ln" | "log" => Ok(Self::ln()),
            "linear" => Ok(Self::linear()),
            "square" => Ok(Self::square()),
            other => Err(Error::Domain(format!("unknown growth function `{other}`"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, alpha: f64) -> f64 {
        (self.f)(alpha)
    }

    /// `β_f = 2 − 1/f(α)`.
    pub fn beta(&self, alpha: f64) -> Result<f64> {
        let v = self.checked(alpha)?;
        Ok(2.0 - 1.0 / v)
    }

    /// Checks `f` is strictly increasing on the given (sorted) sample points.
    pub fn is_increasing_on(&self, alphas: &[f64]) -> bool {
        alphas.windows(2).all(|w| self.eval(w[0]) < self.eval(w[1]))
    }

    fn checked(&self, alpha: f64) -> Result<f64> {
        let v = self.eval(alpha);
        if !(v > 1.0) || !v.is_finite() {
            return Err(Error::Domain(format!(
                "{}({alpha}) = {v}; need f(alpha) > 1",
                self.name
            )));
        }
        Ok(v)
    }
}

/// `x = 1/f(α)`.
pub fn functional_x(f: &FunctionalSpec, alpha: f64) -> Result<f64> {
    Ok(1.0 / f.checked(alpha)?)
}

/// The two quantities behind the functional-case conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FunctionalRatios {
    pub alpha: f64,
    pub beta_f: f64,
    pub x: f64,
    pub max_degree: u64,
    pub edge_total: u128,
    /// `|[xΔ, Δ]|² / |E|`.
    pub ratio1: f64,
    /// `vol([1, xΔ]) / |E|`.
    pub ratio2: f64,
}

/// Evaluates both ratios from exact interval sums at `(α, β_f)`.
///
/// `|E|` is taken as `vol([1, Δ]) / 2`, so `x = 1` gives `ratio2 = 2`.
pub fn functional_conditions_check(
    f: &FunctionalSpec,
    alpha: f64,
    x: f64,
) -> Result<FunctionalRatios> {
    let beta_f = f.beta(alpha)?;
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain(format!("x must lie in (0, 1], got {x}")));
    }
    let p = PowerLawParams::new(alpha, beta_f)?;
    let delta = p.max_degree();
    let xd = x * delta as f64;
    let low_end = (floor_tol(xd) as u64).min(delta);
    let high_start = (ceil_tol(xd) as u64).max(1);

    let low = if low_end >= 1 {
        sums_unchecked(&p, 1, low_end)?.volume
    } else {
        0
    };
    let rest_volume = if low_end < delta {
        sums_unchecked(&p, low_end + 1, delta)?.volume
    } else {
        0
    };
    let volume = low.checked_add(rest_volume).ok_or(Error::Overflow)?;
    let high_size = if high_start <= delta {
        sums_unchecked(&p, high_start, delta)?.size
    } else {
        0
    };
    let edges = volume as f64 / 2.0;
    let hs = high_size as f64;
    Ok(FunctionalRatios {
        alpha,
        beta_f,
        x,
        max_degree: delta,
        edge_total: volume / 2,
        ratio1: hs * hs / edges,
        ratio2: low as f64 / edges,
    })
}

/// Growth of `f(α)` relative to `α`, as a diagnostic only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthRegime {
    /// `f(α) = o(α)`: the case with a PTAS.
    Sublinear,
    /// `f(α) = Θ(α)`.
    Linear,
    /// `f(α) = ω(α)`.
    Superlinear,
}

/// Classifies by the log-log slope `s = ln(f(hi)/f(lo)) / ln(hi/lo)` over
/// the sampled range: `s < 0.9` is sublinear, `s > 1.1` superlinear.
pub fn classify_growth(f: &FunctionalSpec, alphas: &[f64]) -> Result<GrowthRegime> {
    let lo = alphas.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = alphas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(lo > 0.0 && hi.is_finite() && hi > lo) {
        return Err(Error::Domain(
            "need at least two distinct positive sample points".into(),
        ));
    }
    let (flo, fhi) = (f.eval(lo), f.eval(hi));
    if !(flo > 0.0 && fhi > 0.0) {
        return Err(Error::Domain(format!("{} must be positive on the samples", f.name)));
    }
    let slope = ln(fhi / flo) / ln(hi / lo);
    Ok(if slope < 0.9 {
        GrowthRegime::Sublinear
    } else if slope > 1.1 {
        GrowthRegime::Superlinear
    } else {
        GrowthRegime::Linear
    })
}
