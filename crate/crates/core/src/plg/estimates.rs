use super::{zeta, PowerLawParams};
use crate::numeric::exp;

const ZETA_TOL: f64 = 1e-12;

/// Asymptotic vertex count of an `(α, β)`-PLG.
///
/// | regime | estimate |
/// |--------|----------|
/// | β < 1  | `e^{α/β} / (1 − β)` |
/// | β = 1  | `α e^α` |
/// | β > 1  | `ζ(β) e^α` |
///
/// Regimes are selected by exact comparison of `β` with 1.
pub fn node_count_estimate(p: &PowerLawParams) -> f64 {
    let (a, b) = (p.alpha(), p.beta());
    if b < 1.0 {
        exp(a / b) / (1.0 - b)
    } else if b == 1.0 {
        a * exp(a)
    } else {
        zeta(b, ZETA_TOL).unwrap_or(f64::NAN) * exp(a)
    }
}

/// Asymptotic edge count of an `(α, β)`-PLG.
///
/// | regime | estimate |
/// |--------|----------|
/// | β < 2  | `½ e^{2α/β} / (2 − β)` |
/// | β = 2  | `¼ α e^α` |
/// | β > 2  | `½ ζ(β − 1) e^α` |
pub fn edge_count_estimate(p: &PowerLawParams) -> f64 {
    let (a, b) = (p.alpha(), p.beta());
    if b < 2.0 {
        0.5 * exp(2.0 * a / b) / (2.0 - b)
    } else if b == 2.0 {
        0.25 * a * exp(a)
    } else {
        0.5 * zeta(b - 1.0, ZETA_TOL).unwrap_or(f64::NAN) * exp(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn node_estimates() {
        // mpmath: zeta(2.5) * e^10 = 29548.223186006405
        let p = PowerLawParams::new(10.0, 2.5).unwrap();
        assert!(rel(node_count_estimate(&p), 29_548.223_186_006_405) < 1e-11);
        let p = PowerLawParams::new(10.0, 0.5).unwrap();
        assert!(rel(node_count_estimate(&p), 2.0 * libm::exp(20.0)) < 1e-14);
        let p = PowerLawParams::new(10.0, 1.0).unwrap();
        assert!(rel(node_count_estimate(&p), 10.0 * libm::exp(10.0)) < 1e-14);
    }

    #[test]
    fn edge_estimates() {
        // mpmath: zeta(2) / 2 * e^10 = 18116.041979072382
        let p = PowerLawParams::new(10.0, 3.0).unwrap();
        assert!(rel(edge_count_estimate(&p), 18_116.041_979_072_382) < 1e-11);
        let p = PowerLawParams::new(10.0, 2.0).unwrap();
        assert!(rel(edge_count_estimate(&p), 2.5 * libm::exp(10.0)) < 1e-14);
        let p = PowerLawParams::new(10.0, 1.5).unwrap();
        assert!(rel(edge_count_estimate(&p), libm::exp(20.0 / 1.5)) < 1e-14);
    }
}
