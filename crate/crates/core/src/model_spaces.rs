//! Comparison functions on the three constant-curvature model planes.
//!
//! For curvature `k` the model space is the Euclidean plane (`k = 0`), the
//! hyperbolic plane of curvature `k` in the upper half-plane chart (`k < 0`,
//! metric of the standard half-plane scaled by `-1/k` so the geodesic
//! `t ↦ (0, exp(√-k·t))` is unit speed), or the sphere of radius `1/√k`
//! embedded in 3-space (`k > 0`).
//!
//! A comparison function `g_k(t)` is the distance from a fixed comparison
//! point to the arc-length point `γ_k(t)` of a fixed model geodesic:
//!
//! * `k = 0`:  `g(t) = √((u-t)² + v²)` with comparison point `(u, v)`,
//!   geodesic `(t, 0)`;
//! * `k < 0`:  `g(t) = argcosh(((u²+v²)·e^(-st) + e^(st)) / (2v)) / s`,
//!   `s = √-k`, comparison point `(u, v)` with `v > 0`, geodesic
//!   `(0, e^(st))`;
//! * `k > 0`:  `g(t) = arccos(s·(u·cos(st) + v·sin(st))) / s`, `s = √k`,
//!   comparison point `(u, v, √(1/k - u² - v²))`, geodesic
//!   `(cos(st)/s, sin(st)/s, 0)`.
//!
//! All three satisfy `g″ = (1 - g′²)·ct_k(g)` where `ct_k` is the
//! generalized cotangent (`1/g`, `√-k·coth(√-k·g)`, `√k·cot(√k·g)`).

use crate::error::{Error, Result};
use crate::math;

/// Arguments of `arccos`/`argcosh` are clamped into the valid domain when
/// within this distance of the boundary; farther out is a domain error.
const CLAMP_TOL: f64 = 1e-12;

/// Distances below this count as "on the geodesic" for derivative purposes.
const SINGULAR_G: f64 = 1e-12;

/// Switch `ct_k` to its series once `|k|·g²` drops below this.
const SERIES_THRESHOLD: f64 = 1e-8;

pub const PI: f64 = core::f64::consts::PI;

fn sq(x: f64) -> f64 {
    x * x
}

/// Sign class of a curvature bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurvatureSign {
    Negative,
    Zero,
    Positive,
}

/// A finite curvature bound `k` (units 1/length²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature(f64);

impl Curvature {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::InvalidParams("curvature must be finite"));
        }
        Ok(Curvature(k))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn sign(self) -> CurvatureSign {
        if self.0 < 0.0 {
            CurvatureSign::Negative
        } else if self.0 > 0.0 {
            CurvatureSign::Positive
        } else {
            CurvatureSign::Zero
        }
    }

    /// `√|k|`, the scale factor of the non-flat charts.
    pub fn sqrt_abs(self) -> f64 {
        math::sqrt(math::abs(self.0))
    }
}

/// Curvature `k` together with the chart parameters `(u, v)` selecting one
/// comparison function `g_k`.
///
/// Invariants enforced by [`ComparisonParams::new`]:
/// * `v > 0` for `k ≤ 0`;
/// * `u² + v² < 1/k` for `k > 0`;
/// * `u ≥ 0` for `k < 0`: the sign of `u` is unobservable there, since
///   `g_k` depends on `u` only through `u²`, and is canonicalized away.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonParams {
    k: Curvature,
    u: f64,
    v: f64,
}

impl ComparisonParams {
    pub fn new(k: Curvature, u: f64, v: f64) -> Result<Self> {
        if !u.is_finite() || !v.is_finite() {
            return Err(Error::InvalidParams("u and v must be finite"));
        }
        match k.sign() {
            CurvatureSign::Negative => {
                if v <= 0.0 {
                    return Err(Error::InvalidParams("v must be positive for k <= 0"));
                }
                Ok(ComparisonParams {
                    k,
                    u: math::abs(u),
                    v,
                })
            }
            CurvatureSign::Zero => {
                if v <= 0.0 {
                    return Err(Error::InvalidParams("v must be positive for k <= 0"));
                }
                Ok(ComparisonParams { k, u, v })
            }
            CurvatureSign::Positive => {
                if sq(u) + sq(v) >= 1.0 / k.value() {
                    return Err(Error::InvalidParams(
                        "u^2 + v^2 must be below 1/k for k > 0",
                    ));
                }
                Ok(ComparisonParams { k, u, v })
            }
        }
    }

    pub fn curvature(self) -> Curvature {
        self.k
    }

    pub fn u(self) -> f64 {
        self.u
    }

    pub fn v(self) -> f64 {
        self.v
    }
}

/// A point of a model space in its chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelPoint {
    /// Euclidean plane, `k = 0`.
    Plane { x: f64, y: f64 },
    /// Upper half-plane (`y > 0`), `k < 0`.
    HalfPlane { x: f64, y: f64 },
    /// Ambient coordinates on the sphere of radius `1/√k`, `k > 0`.
    Sphere { x: f64, y: f64, z: f64 },
}

fn clamp_acos_arg(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain("arccos argument is not finite"));
    }
    if x > 1.0 {
        if x <= 1.0 + CLAMP_TOL {
            Ok(1.0)
        } else {
            Err(Error::Domain("arccos argument above 1"))
        }
    } else if x < -1.0 {
        if x >= -1.0 - CLAMP_TOL {
            Ok(-1.0)
        } else {
            Err(Error::Domain("arccos argument below -1"))
        }
    } else {
        Ok(x)
    }
}

fn clamp_acosh_arg(z: f64) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::Domain("argcosh argument is not finite"));
    }
    if z < 1.0 {
        if z >= 1.0 - CLAMP_TOL {
            Ok(1.0)
        } else {
            Err(Error::Domain("argcosh argument below 1"))
        }
    } else {
        Ok(z)
    }
}

/// Evaluates the comparison function `g_k(t)`.
pub fn eval_g(params: ComparisonParams, t: f64) -> Result<f64> {
    let (u, v) = (params.u, params.v);
    match params.k.sign() {
        CurvatureSign::Zero => Ok(math::hypot(u - t, v)),
        CurvatureSign::Negative => {
            let s = params.k.sqrt_abs();
            let z = ((sq(u) + sq(v)) * math::exp(-s * t) + math::exp(s * t)) / (2.0 * v);
            Ok(math::acosh(clamp_acosh_arg(z)?) / s)
        }
        CurvatureSign::Positive => {
            let s = params.k.sqrt_abs();
            let x = s * (u * math::cos(s * t) + v * math::sin(s * t));
            Ok(math::acos(clamp_acos_arg(x)?) / s)
        }
    }
}

/// Evaluates `g_k′(t)` from the closed form of each chart.
///
/// The result is clamped into `[-1, 1]`: comparison functions are
/// nonexpanding, so any excess is rounding noise near `g → 0`.
pub fn eval_g_prime(params: ComparisonParams, t: f64) -> Result<f64> {
    let g = eval_g(params, t)?;
    if g <= SINGULAR_G {
        return Err(Error::Singularity(
            "derivative undefined where g vanishes (point on the geodesic)",
        ));
    }
    let (u, v) = (params.u, params.v);
    let gp = match params.k.sign() {
        CurvatureSign::Zero => (t - u) / g,
        CurvatureSign::Negative => {
            let s = params.k.sqrt_abs();
            (math::exp(s * t) - (sq(u) + sq(v)) * math::exp(-s * t)) / (2.0 * v * math::sinh(s * g))
        }
        CurvatureSign::Positive => {
            let s = params.k.sqrt_abs();
            if PI / s - g <= SINGULAR_G {
                return Err(Error::Singularity(
                    "derivative undefined at the antipodal configuration",
                ));
            }
            s * (u * math::sin(s * t) - v * math::cos(s * t)) / math::sin(s * g)
        }
    };
    Ok(math::max(-1.0, math::min(1.0, gp)))
}

/// Evaluates `g_k″(t)` via the differential equation `g″ = rhs(k, g, g′)`
/// that every comparison function satisfies.
pub fn eval_g_second(params: ComparisonParams, t: f64) -> Result<f64> {
    let g = eval_g(params, t)?;
    let gp = eval_g_prime(params, t)?;
    rhs(params.k, g, gp)
}

/// Generalized cotangent `ct_k(g)`: `1/g` for `k = 0`,
/// `√-k·coth(√-k·g)` for `k < 0`, `√k·cot(√k·g)` for `k > 0`.
///
/// Near `k·g² = 0` all three branches share the series
/// `1/g - k·g/3 - k²·g³/45 + O(k³g⁵)`; it is used once `|k|·g² < 1e-8`,
/// which keeps `ct_k` continuous in `k` across zero without cancellation.
fn generalized_cot(k: Curvature, g: f64) -> Result<f64> {
    if g <= 0.0 {
        return Err(Error::Domain("ct_k requires g > 0"));
    }
    let kv = k.value();
    if math::abs(kv) * sq(g) < SERIES_THRESHOLD {
        return Ok(1.0 / g - kv * g / 3.0 - sq(kv) * g * sq(g) / 45.0);
    }
    let s = k.sqrt_abs();
    match k.sign() {
        CurvatureSign::Negative => Ok(s * math::cosh(s * g) / math::sinh(s * g)),
        CurvatureSign::Positive => {
            if s * g >= PI {
                return Err(Error::Domain("ct_k requires sqrt(k)*g < pi"));
            }
            Ok(s * math::cos(s * g) / math::sin(s * g))
        }
        CurvatureSign::Zero => Ok(1.0 / g),
    }
}

/// Right-hand side `(1 - g′²)·ct_k(g)` of the comparison differential
/// equation, valid for `g > 0` (and `√k·g < π` when `k > 0`).
pub fn rhs(k: Curvature, g: f64, gp: f64) -> Result<f64> {
    Ok((1.0 - sq(gp)) * generalized_cot(k, g)?)
}

/// Arc-length point `γ_k(t)` of the model geodesic.
pub fn geodesic_point(k: Curvature, t: f64) -> Result<ModelPoint> {
    match k.sign() {
        CurvatureSign::Zero => Ok(ModelPoint::Plane { x: t, y: 0.0 }),
        CurvatureSign::Negative => {
            let s = k.sqrt_abs();
            let y = math::exp(s * t);
            if !y.is_finite() || y <= 0.0 {
                return Err(Error::Domain("geodesic parameter overflows the chart"));
            }
            Ok(ModelPoint::HalfPlane { x: 0.0, y })
        }
        CurvatureSign::Positive => {
            if t < 0.0 {
                return Err(Error::Domain(
                    "geodesic parameter must satisfy t >= 0 for k > 0",
                ));
            }
            let s = k.sqrt_abs();
            Ok(ModelPoint::Sphere {
                x: math::cos(s * t) / s,
                y: math::sin(s * t) / s,
                z: 0.0,
            })
        }
    }
}

/// Comparison point of the chart: `(u, v)` for `k ≤ 0` and
/// `(u, v, +√(1/k - u² - v²))` for `k > 0` (upper hemisphere root).
pub fn comparison_point(params: ComparisonParams) -> ModelPoint {
    let (u, v) = (params.u, params.v);
    match params.k.sign() {
        CurvatureSign::Zero => ModelPoint::Plane { x: u, y: v },
        CurvatureSign::Negative => ModelPoint::HalfPlane { x: u, y: v },
        CurvatureSign::Positive => {
            let w2 = 1.0 / params.k.value() - sq(u) - sq(v);
            ModelPoint::Sphere {
                x: u,
                y: v,
                z: math::sqrt(math::max(w2, 0.0)),
            }
        }
    }
}

/// Intrinsic distance `d_k(P, Q)` of the model space of curvature `k`.
///
/// Errors if a point does not belong to the chart of `k` or violates its
/// chart invariant (`y > 0` for the half-plane, norm `1/√k` for the sphere).
pub fn model_distance(k: Curvature, p: &ModelPoint, q: &ModelPoint) -> Result<f64> {
    match (k.sign(), p, q) {
        (
            CurvatureSign::Zero,
            ModelPoint::Plane { x: x1, y: y1 },
            ModelPoint::Plane { x: x2, y: y2 },
        ) => Ok(math::hypot(x1 - x2, y1 - y2)),
        (
            CurvatureSign::Negative,
            ModelPoint::HalfPlane { x: x1, y: y1 },
            ModelPoint::HalfPlane { x: x2, y: y2 },
        ) => {
            if *y1 <= 0.0 || *y2 <= 0.0 {
                return Err(Error::Domain("half-plane points require y > 0"));
            }
            let s = k.sqrt_abs();
            let z = 1.0 + (sq(x1 - x2) + sq(y1 - y2)) / (2.0 * y1 * y2);
            Ok(math::acosh(clamp_acosh_arg(z)?) / s)
        }
        (
            CurvatureSign::Positive,
            ModelPoint::Sphere {
                x: x1,
                y: y1,
                z: z1,
            },
            ModelPoint::Sphere {
                x: x2,
                y: y2,
                z: z2,
            },
        ) => {
            let s = k.sqrt_abs();
            for (x, y, z) in [(x1, y1, z1), (x2, y2, z2)] {
                let norm = math::sqrt(sq(*x) + sq(*y) + sq(*z));
                if math::abs(norm * s - 1.0) > 1e-12 {
                    return Err(Error::Domain("sphere point norm must equal 1/sqrt(k)"));
                }
            }
            let dot = x1 * x2 + y1 * y2 + z1 * z2;
            Ok(math::acos(clamp_acos_arg(k.value() * dot)?) / s)
        }
        _ => Err(Error::Domain(
            "point chart does not match the curvature sign",
        )),
    }
}
