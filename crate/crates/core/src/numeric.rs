//! Float helpers over `libm` (no `std` float intrinsics in `no_std`).

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

pub(crate) fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

/// Relative window inside which a value is treated as the nearest integer.
pub(crate) const SNAP_REL: f64 = 1e-9;

/// `floor(x)`, except that values within [`SNAP_REL`] (relative) of an
/// integer are taken to be that integer.
///
/// Quantities like `e^{ln 100 / 2}` land a few ulps below the integer they
/// denote; a plain floor would then lose a whole unit.
pub(crate) fn floor_tol(x: f64) -> f64 {
    let r = round(x);
    if (x - r).abs() <= SNAP_REL * r.abs().max(1.0) {
        r
    } else {
        floor(x)
    }
}

pub(crate) fn ceil_tol(x: f64) -> f64 {
    let r = round(x);
    if (x - r).abs() <= SNAP_REL * r.abs().max(1.0) {
        r
    } else {
        ceil(x)
    }
}
