use alloc::vec;
use alloc::vec::Vec;

use super::local::polish;
use super::result::{AlgoParams, AlgoResult, Algorithm, SdpReport};
use crate::numeric::{ceil, sqrt};
use crate::rng::SeededRng;
use crate::{Cut, Multigraph, Result};

pub const DEFAULT_RESTARTS: usize = 100;
/// The dual certificate needs dense `O(n³)` factorizations; above this size
/// only the relaxation value is reported.
pub const UB_CERTIFICATE_MAX_N: usize = 256;
const MAX_SWEEPS: usize = 500;
const REL_TOL: f64 = 1e-7;

/// Goemans–Williamson: low-rank SDP relaxation plus random hyperplanes.
///
/// The relaxation is solved by block-coordinate ascent on unit vectors of
/// dimension `⌈√(2n)⌉ + 1`. Each of the `restarts` hyperplanes (stream
/// `r + 1` of `seed`) yields a cut that is polished by local search; the best
/// cut wins. For `n ≤ 256` a dual-feasible upper bound on the optimum is
/// attached.
pub fn gw_sdp(g: &Multigraph, seed: u64, restarts: usize) -> Result<AlgoResult> {
    let n = g.vertex_count();
    let params = AlgoParams {
        seed: Some(seed),
        restarts: Some(restarts),
        ..AlgoParams::default()
    };
    if n < 2 {
        let mut r = AlgoResult::new(Algorithm::Gw, 0, Cut::new(n), params);
        r.sdp = Some(SdpReport {
            rank: n,
            sweeps: 0,
            sdp_value: 0.0,
            upper_bound: Some(0.0),
        });
        return Ok(r);
    }
    let sol = solve_relaxation(g, seed);
    let k = sol.rank;

    let mut best: Option<(u64, Cut)> = None;
    for r in 0..restarts.max(1) {
        let mut rng = SeededRng::with_stream(seed, r as u64 + 1);
        let h: Vec<f64> = (0..k).map(|_| rng.gaussian()).collect();
        let sides = (0..n)
            .map(|v| dot(&sol.vectors[v * k..(v + 1) * k], &h) < 0.0)
            .collect();
        let cut = polish(g, Cut::from_sides(sides));
        let value = g.cut_value(&cut)?;
        let replace = match &best {
            None => true,
            Some((bv, bc)) => super::better(value, &cut, *bv, bc),
        };
        if replace {
            best = Some((value, cut));
        }
    }
    let (value, cut) = best.expect("at least one rounding");
    let upper_bound = (n <= UB_CERTIFICATE_MAX_N).then(|| dual_bound(g, &sol));
    let mut r = AlgoResult::new(Algorithm::Gw, value, cut, params);
    r.sdp = Some(SdpReport {
        rank: k,
        sweeps: sol.sweeps,
        sdp_value: sol.value,
        upper_bound,
    });
    Ok(r)
}

struct Relaxation {
    rank: usize,
    /// Row-major `n × rank`.
    vectors: Vec<f64>,
    value: f64,
    sweeps: usize,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) -> bool {
    let norm = sqrt(dot(v, v));
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
        true
    } else {
        false
    }
}

fn solve_relaxation(g: &Multigraph, seed: u64) -> Relaxation {
    let n = g.vertex_count();
    let k = ceil(sqrt(2.0 * n as f64)) as usize + 1;
    let adj = g.adjacency();
    let mut rng = SeededRng::with_stream(seed, 0);
    let mut vecs = vec![0.0; n * k];
    for v in 0..n {
        let row = &mut vecs[v * k..(v + 1) * k];
        loop {
            row.iter_mut().for_each(|x| *x = rng.gaussian());
            if normalize(row) {
                break;
            }
        }
    }
    let objective = |vecs: &[f64]| -> f64 {
        g.edges()
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| e.mult as f64 * (1.0 - dot(&vecs[e.u * k..(e.u + 1) * k], &vecs[e.v * k..(e.v + 1) * k])) / 2.0)
            .sum()
    };
    let mut value = objective(&vecs);
    let mut sweeps = 0;
    let mut acc = vec![0.0; k];
    while sweeps < MAX_SWEEPS {
        for v in 0..n {
            acc.iter_mut().for_each(|x| *x = 0.0);
            for &(w, m) in adj.neighbors(v) {
                let row = &vecs[w * k..(w + 1) * k];
                for (a, x) in acc.iter_mut().zip(row) {
                    *a -= m as f64 * x;
                }
            }
            if normalize(&mut acc) {
                vecs[v * k..(v + 1) * k].copy_from_slice(&acc);
            }
        }
        sweeps += 1;
        let next = objective(&vecs);
        let gain = next - value;
        value = next;
        if gain < REL_TOL * value.max(1.0) {
            break;
        }
    }
    Relaxation {
        rank: k,
        vectors: vecs,
        value,
        sweeps,
    }
}

/// Dual-feasible bound from the primal vectors.
///
/// With `y_i = (d_i − Σ_j A_ij ⟨v_i, v_j⟩)/4` and `M = Diag(y) − L/4`, the
/// point `y + s·1` is dual feasible once `M + sI ⪰ 0`, giving
/// `OPT ≤ SDP ≤ Σ y_i + n·s`. The shift `s` is found by bisection on
/// Cholesky success.
fn dual_bound(g: &Multigraph, sol: &Relaxation) -> f64 {
    let n = g.vertex_count();
    let k = sol.rank;
    let row = |v: usize| &sol.vectors[v * k..(v + 1) * k];
    let mut m = vec![0.0; n * n];
    let mut y = vec![0.0; n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        let w = e.mult as f64;
        let c = dot(row(e.u), row(e.v));
        y[e.u] += w * (1.0 - c) / 4.0;
        y[e.v] += w * (1.0 - c) / 4.0;
        // −L/4 off-diagonal entries are +A/4.
        m[e.u * n + e.v] += w / 4.0;
        m[e.v * n + e.u] += w / 4.0;
        m[e.u * n + e.u] -= w / 4.0;
        m[e.v * n + e.v] -= w / 4.0;
    }
    for i in 0..n {
        m[i * n + i] += y[i];
    }
    // Gershgorin: M + hi·I is diagonally dominant.
    let hi = (0..n)
        .map(|i| {
            let off: f64 = (0..n).filter(|&j| j != i).map(|j| m[i * n + j].abs()).sum();
            (off - m[i * n + i]).max(0.0)
        })
        .fold(0.0, f64::max)
        + 1e-9;
    let scale = g.total_multiplicity().max(1) as f64;
    let shift = if is_positive_definite(&m, n, 1e-12 * scale) {
        0.0
    } else {
        let (mut lo, mut hi) = (0.0, hi);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if is_positive_definite(&m, n, mid) {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-12 * scale {
                break;
            }
        }
        hi
    };
    let sum: f64 = y.iter().sum();
    sum + n as f64 * (shift + 1e-12 * scale)
}

fn is_positive_definite(m: &[f64], n: usize, shift: f64) -> bool {
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = m[i * n + j] + if i == j { shift } else { 0.0 };
            for p in 0..j {
                s -= l[i * n + p] * l[j * n + p];
            }
            if i == j {
                if s <= 0.0 {
                    return false;
                }
                l[i * n + i] = sqrt(s);
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    true
}
