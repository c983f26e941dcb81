//! Two-point boundary fits: solve for `(u, v)` so that `g_k` takes
//! prescribed values at two parameters, constructing `g_k^{t1,t2}`.
//!
//! Each chart reduces to a closed form or an explicit 2×2 linear system,
//! solved directly (no general solver): determinism, exactness and the
//! conditioning analysis via the `sinh`/`sin` determinant come for free.

use crate::error::{Error, Result};
use crate::math;
use crate::model_spaces::{eval_g, ComparisonParams, Curvature, CurvatureSign, PI};

/// Slack accepted on the feasibility boundaries before declaring a chord
/// unrealizable (`4AB >= 1` hyperbolic, `u² + v² < 1/k` spherical, `v² > 0`
/// Euclidean).
const FEAS_TOL: f64 = 1e-12;

fn sq(x: f64) -> f64 {
    x * x
}

/// A chord to fit: targets `g(t1) = alpha`, `g(t2) = beta` at curvature `k`.
///
/// Construction enforces `t1 < t2`, positive targets, the triangle
/// feasibility `|alpha - beta| <= t2 - t1 <= alpha + beta`, and for `k > 0`
/// the size guard `t1 >= 0`, `√k·(t2 - t1) < π`, `√k·max(alpha, beta) < π`.
///
/// Triangle equality (the comparison point on the geodesic line) is kept:
/// the half-plane chart realizes it with `u = 0, v > 0`. The flat and
/// spherical charts cannot (`v = 0`, resp. `u² + v² = 1/k`), and their fit
/// routines reject it as infeasible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordSpec {
    t1: f64,
    t2: f64,
    alpha: f64,
    beta: f64,
    k: Curvature,
}

impl ChordSpec {
    pub fn new(k: Curvature, t1: f64, t2: f64, alpha: f64, beta: f64) -> Result<Self> {
        for x in [t1, t2, alpha, beta] {
            if !x.is_finite() {
                return Err(Error::InvalidParams("chord data must be finite"));
            }
        }
        if t1 >= t2 {
            return Err(Error::InvalidParams("chord requires t1 < t2"));
        }
        if alpha <= 0.0 || beta <= 0.0 {
            return Err(Error::InvalidParams("chord targets must be positive"));
        }
        let span = t2 - t1;
        if math::abs(alpha - beta) > span {
            return Err(Error::Infeasible(
                "triangle inequality |alpha - beta| <= t2 - t1 violated",
            ));
        }
        if span > alpha + beta {
            return Err(Error::Infeasible(
                "triangle inequality t2 - t1 <= alpha + beta violated",
            ));
        }
        if let CurvatureSign::Positive = k.sign() {
            let s = k.sqrt_abs();
            if t1 < 0.0 {
                return Err(Error::InvalidParams("spherical chord requires t1 >= 0"));
            }
            if s * span >= PI {
                return Err(Error::InvalidParams(
                    "spherical chord requires sqrt(k)*(t2 - t1) < pi",
                ));
            }
            if s * math::max(alpha, beta) >= PI {
                return Err(Error::InvalidParams(
                    "spherical chord requires sqrt(k)*max(alpha, beta) < pi",
                ));
            }
        }
        Ok(ChordSpec {
            t1,
            t2,
            alpha,
            beta,
            k,
        })
    }

    pub fn t1(&self) -> f64 {
        self.t1
    }

    pub fn t2(&self) -> f64 {
        self.t2
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn curvature(&self) -> Curvature {
        self.k
    }
}

/// Fitted parameters plus the boundary residuals `g_k(ti) - target`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub params: ComparisonParams,
    pub residual_t1: f64,
    pub residual_t2: f64,
}

fn finish(spec: &ChordSpec, params: ComparisonParams) -> Result<FitResult> {
    let residual_t1 = eval_g(params, spec.t1)? - spec.alpha;
    let residual_t2 = eval_g(params, spec.t2)? - spec.beta;
    let bound = 1e-10 * (1.0 + spec.alpha + spec.beta);
    if math::abs(residual_t1) > bound || math::abs(residual_t2) > bound {
        return Err(Error::Infeasible("fit residual exceeds tolerance"));
    }
    Ok(FitResult {
        params,
        residual_t1,
        residual_t2,
    })
}

/// Euclidean fit: `u` from the difference of the two squared conditions,
/// `v = +√(alpha² - (u - t1)²)`.
pub fn fit_euclidean(spec: &ChordSpec) -> Result<FitResult> {
    if spec.k.sign() != CurvatureSign::Zero {
        return Err(Error::InvalidParams("fit_euclidean requires k = 0"));
    }
    let u =
        (sq(spec.alpha) - sq(spec.beta)) / (2.0 * (spec.t2 - spec.t1)) + (spec.t1 + spec.t2) / 2.0;
    let v2 = sq(spec.alpha) - sq(u - spec.t1);
    if v2 <= FEAS_TOL * (1.0 + sq(spec.alpha)) {
        return Err(Error::Infeasible(
            "chord is degenerate or unrealizable in the plane (v^2 <= 0)",
        ));
    }
    let params = ComparisonParams::new(spec.k, u, math::sqrt(v2))?;
    finish(spec, params)
}

/// Hyperbolic fit. With `s = √-k`, `A = (u²+v²)/(2v)` and `B = 1/(2v)` the
/// boundary conditions become the linear system
/// `A·e^(-s·ti) + B·e^(s·ti) = cosh(s·target_i)` with determinant
/// `2·sinh(s·(t2-t1)) ≠ 0`; then `v = 1/(2B)` and `u = √((4AB - 1)/(4B²))`.
/// Requires `B > 0` and `4AB >= 1` (equality is the on-geodesic chord).
pub fn fit_hyperbolic(spec: &ChordSpec) -> Result<FitResult> {
    if spec.k.sign() != CurvatureSign::Negative {
        return Err(Error::InvalidParams("fit_hyperbolic requires k < 0"));
    }
    let s = spec.k.sqrt_abs();
    let (e1, e2) = (math::exp(s * spec.t1), math::exp(s * spec.t2));
    let (c1, c2) = (math::cosh(s * spec.alpha), math::cosh(s * spec.beta));
    for x in [e1, e2, c1, c2] {
        if !x.is_finite() {
            return Err(Error::Domain("hyperbolic fit overflows the chart"));
        }
    }
    let det = e2 / e1 - e1 / e2; // 2 sinh(s (t2 - t1)) > 0
    let a = (c1 * e2 - c2 * e1) / det;
    let b = (c2 / e1 - c1 / e2) / det;
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain("hyperbolic fit overflows the chart"));
    }
    if b <= 0.0 {
        return Err(Error::Infeasible("chord not realizable (B <= 0)"));
    }
    let disc = 4.0 * a * b - 1.0;
    if disc < -FEAS_TOL {
        return Err(Error::Infeasible("chord not realizable (4AB < 1)"));
    }
    let v = 1.0 / (2.0 * b);
    let u = math::sqrt(math::max(disc, 0.0)) * v;
    let params = ComparisonParams::new(spec.k, u, v)?;
    finish(spec, params)
}

/// Spherical fit. With `s = √k` the boundary conditions are the linear
/// system `u·cos(s·ti) + v·sin(s·ti) = cos(s·target_i)/s` with determinant
/// `sin(s·(t2-t1)) ≠ 0` under the size guard; the result must satisfy
/// `u² + v² < 1/k`.
pub fn fit_spherical(spec: &ChordSpec) -> Result<FitResult> {
    if spec.k.sign() != CurvatureSign::Positive {
        return Err(Error::InvalidParams("fit_spherical requires k > 0"));
    }
    let s = spec.k.sqrt_abs();
    let (cos1, sin1) = (math::cos(s * spec.t1), math::sin(s * spec.t1));
    let (cos2, sin2) = (math::cos(s * spec.t2), math::sin(s * spec.t2));
    let r1 = math::cos(s * spec.alpha) / s;
    let r2 = math::cos(s * spec.beta) / s;
    let det = cos1 * sin2 - sin1 * cos2; // sin(s (t2 - t1)) > 0 by the size guard
    let u = (r1 * sin2 - r2 * sin1) / det;
    let v = (cos1 * r2 - cos2 * r1) / det;
    if sq(u) + sq(v) >= 1.0 / spec.k.value() - FEAS_TOL {
        return Err(Error::Infeasible(
            "chord not realizable on the sphere (u^2 + v^2 >= 1/k)",
        ));
    }
    let params = ComparisonParams::new(spec.k, u, v)?;
    finish(spec, params)
}

/// Dispatches on the sign of the chord's curvature.
pub fn fit(spec: &ChordSpec) -> Result<FitResult> {
    match spec.k.sign() {
        CurvatureSign::Zero => fit_euclidean(spec),
        CurvatureSign::Negative => fit_hyperbolic(spec),
        CurvatureSign::Positive => fit_spherical(spec),
    }
}
