//! Sizes and volumes of degree intervals `[a, b]`, exactly and as integral
//! envelopes.

use serde::Serialize;

use super::PowerLawParams;
use crate::numeric::{exp, ln, powf, SNAP_REL};
use crate::{Error, Result};

/// Exact `Σ_{j=a}^{b} y_j` and `Σ_{j=a}^{b} j·y_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalSums {
    pub size: u128,
    pub volume: u128,
}

/// A closed real envelope `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntervalBounds {
    pub lo: f64,
    pub hi: f64,
}

impl IntervalBounds {
    /// Membership with a `1e-12` relative allowance for rounding in the
    /// floating-point envelope.
    pub fn contains(&self, x: f64) -> bool {
        let slack = 1e-12 * self.lo.abs().max(self.hi.abs()).max(1.0);
        x >= self.lo - slack && x <= self.hi + slack
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

fn check_range(p: &PowerLawParams, a: u64, b: u64) -> Result<()> {
    let delta = p.max_degree();
    if a == 0 || a > delta {
        return Err(Error::Range {
            what: "a",
            value: a,
            lo: 1,
            hi: delta,
        });
    }
    if b < a || b > delta {
        return Err(Error::Range {
            what: "b",
            value: b,
            lo: a,
            hi: delta,
        });
    }
    Ok(())
}

/// Exact interval sums, `1 ≤ a ≤ b ≤ Δ`.
///
/// Steps through single indices while the counts are distinct, then sweeps
/// count levels, so the cost is the number of distinct counts in the range,
/// not `b − a`.
pub fn interval_sums(p: &PowerLawParams, a: u64, b: u64) -> Result<IntervalSums> {
    check_range(p, a, b)?;
    sums_unchecked(p, a, b)
}

pub(crate) fn sums_unchecked(p: &PowerLawParams, a: u64, b: u64) -> Result<IntervalSums> {
    let scale = p.scale();
    let beta = p.beta();
    let count = |j: u64| p.count_with_scale(scale, j);
    let mut acc = Acc::default();
    let mut i = a;
    let mut v = count(i);
    while i <= b && v > 0 {
        let next = if i < b { count(i + 1) } else { 0 };
        if i < b && next == v {
            // Runs are no longer singletons, so from here on there are about
            // as many count levels as runs: sweep by level.
            layer_cake(&count, scale, beta, v, i, b, &mut acc)?;
            break;
        }
        acc.add(v, i, i)?;
        i += 1;
        v = next;
    }
    Ok(IntervalSums {
        size: acc.size,
        volume: acc.volume,
    })
}

#[derive(Default)]
struct Acc {
    size: u128,
    volume: u128,
}

impl Acc {
    /// Adds `weight` copies of every index in `[i, j]`.
    fn add(&mut self, weight: u128, i: u64, j: u64) -> Result<()> {
        let len = (j - i + 1) as u128;
        let index_sum = (i as u128 + j as u128)
            .checked_mul(len)
            .ok_or(Error::Overflow)?
            / 2;
        self.size = self
            .size
            .checked_add(weight.checked_mul(len).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
        self.volume = self
            .volume
            .checked_add(weight.checked_mul(index_sum).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
        Ok(())
    }
}

/// Adds `Σ_{j∈[i,b]} y_j` and `Σ j·y_j` as `Σ_{u=1}^{v}` over the prefix
/// `[i, J(u)]` where `y_j ≥ u`, given `count(i) = v`.
fn layer_cake(
    count: &impl Fn(u64) -> u128,
    scale: f64,
    beta: f64,
    v: u128,
    i: u64,
    b: u64,
    acc: &mut Acc,
) -> Result<()> {
    let mut lo = i;
    let mut u = v;
    while u >= 1 {
        let j = last_at_least(count, scale, beta, u, lo, b);
        if j == b {
            // Every smaller level spans the whole range.
            return acc.add(u, i, b);
        }
        acc.add(1, i, j)?;
        lo = j;
        u -= 1;
    }
    Ok(())
}

/// Largest `j` in `[i, b]` with `count(j) ≥ v`, given `count(i) ≥ v`.
fn last_at_least(count: &impl Fn(u64) -> u128, scale: f64, beta: f64, v: u128, i: u64, b: u64) -> u64 {
    // count(j) ≥ v  ⇔  scale / j^β ≥ v − min(SNAP_REL·v, ½), up to rounding.
    let vf = v as f64;
    let threshold = vf - (SNAP_REL * vf).min(0.5);
    let guess = powf(scale / threshold, 1.0 / beta);
    if !guess.is_finite() || guess >= b as f64 + 1.0 {
        if count(b) >= v {
            return b;
        }
    } else if guess < i as f64 + 1.0 {
        if i == b || count(i + 1) < v {
            return i;
        }
    } else {
        let j = guess as u64;
        let frac = guess - j as f64;
        // Far enough from an integer that rounding in `count` cannot move
        // the boundary.
        let margin = 1e-12 * guess + 1e-9;
        if frac > margin && frac < 1.0 - margin {
            return j;
        }
    }
    let start = if guess.is_finite() && guess >= i as f64 {
        (guess as u64).clamp(i, b)
    } else {
        i
    };
    // Gallop to bracket the boundary with count(lo) ≥ v > count(hi), then bisect.
    let (mut lo, mut hi) = if count(start) >= v {
        let mut lo = start;
        let mut step = 1u64;
        loop {
            if lo == b {
                return b;
            }
            let probe = lo.saturating_add(step).min(b);
            if count(probe) >= v {
                lo = probe;
                step = step.saturating_mul(2);
            } else {
                break (lo, probe);
            }
        }
    } else {
        let mut hi = start;
        let mut step = 1u64;
        loop {
            let probe = hi.saturating_sub(step).max(i);
            if probe == i || count(probe) >= v {
                break (probe, hi);
            }
            hi = probe;
            step = step.saturating_mul(2);
        }
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if count(mid) >= v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn interval_size_exact(p: &PowerLawParams, a: u64, b: u64) -> Result<u128> {
    Ok(interval_sums(p, a, b)?.size)
}

pub fn interval_volume_exact(p: &PowerLawParams, a: u64, b: u64) -> Result<u128> {
    Ok(interval_sums(p, a, b)?.volume)
}

/// `∫_lo^hi c·t^{-s} dt` in closed form.
fn power_integral(c: f64, s: f64, lo: f64, hi: f64) -> f64 {
    if s == 1.0 {
        c * (ln(hi) - ln(lo))
    } else {
        c * (powf(hi, 1.0 - s) - powf(lo, 1.0 - s)) / (1.0 - s)
    }
}

/// Envelope for the size of `[a, b]` with `f(t) = e^α / t^β`:
/// `[∫_a^{b+1} f − (b − a + 1), ∫_a^{b+1} f + f(a) − f(b + 1)]`.
pub fn interval_size_bounds(p: &PowerLawParams, a: u64, b: u64) -> Result<IntervalBounds> {
    check_range(p, a, b)?;
    let scale = exp(p.alpha());
    let beta = p.beta();
    let (af, bf) = (a as f64, b as f64);
    let f = |t: f64| scale / powf(t, beta);
    let integral = power_integral(scale, beta, af, bf + 1.0);
    Ok(IntervalBounds {
        lo: integral - (bf - af + 1.0),
        hi: integral + f(af) - f(bf + 1.0),
    })
}

/// Envelope for the volume of `[a, b]` with `g(t) = t·f(t) = e^α t^{1−β}`:
///
/// * `hi = ∫_a^{b+1} g + |g(b+1) − g(a)|`
/// * `lo = ∫_a^{b+1} g − (b(b+1)/2 − (a−1)a/2) − max(0, g(b+1) − g(a))`
///
/// The last term of `lo` vanishes for `β ≥ 1` where `g` is non-increasing; it
/// is the rectangle-rule deficit when `g` increases (`β < 1`).
pub fn interval_volume_bounds(p: &PowerLawParams, a: u64, b: u64) -> Result<IntervalBounds> {
    check_range(p, a, b)?;
    let scale = exp(p.alpha());
    let beta = p.beta();
    let (af, bf) = (a as f64, b as f64);
    let g = |t: f64| scale * powf(t, 1.0 - beta);
    let integral = power_integral(scale, beta - 1.0, af, bf + 1.0);
    let rise = g(bf + 1.0) - g(af);
    let floor_loss = 0.5 * bf * (bf + 1.0) - 0.5 * (af - 1.0) * af;
    Ok(IntervalBounds {
        lo: integral - floor_loss - rise.max(0.0),
        hi: integral + rise.abs(),
    })
}
