//! Thin wrappers over `libm` so the crate builds without `std`.

pub(crate) use libm::{acos, acosh, cos, cosh, exp, fabs as abs, hypot, sin, sinh, sqrt};

pub(crate) fn max(a: f64, b: f64) -> f64 {
    if a > b {
        a
    } else {
        b
    }
}

pub(crate) fn min(a: f64, b: f64) -> f64 {
    if a < b {
        a
    } else {
        b
    }
}
