//! Sampled 1-dimensional functions and the distance-like property.
//!
//! A non-negative function `g` on `[a, b]` is distance-like when it is
//! nonexpanding and `|t1 - t2| <= g(t1) + g(t2)` for all `t1, t2`. On a
//! grid, the cheap route checks the slope condition on consecutive nodes
//! (the triangle inequality of sums extends it to all pairs) plus the
//! single endpoint condition `b - a <= g(a) + g(b)`; the brute-force
//! pairwise oracle checks both conditions over every grid pair.
//!
//! Between nodes the function is read as piecewise linear, the unique
//! interpolation that preserves slope bounds.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Absolute slack on the additive two-point bound. The endpoint shortcut
/// and the pairwise oracle share it, so the two verdicts agree exactly.
pub const TWO_POINT_TOL: f64 = 1e-12;

/// Samples of a function on a strictly increasing grid, values `>= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    ts: Vec<f64>,
    gs: Vec<f64>,
}

impl SampledFunction {
    pub fn new(ts: Vec<f64>, gs: Vec<f64>) -> Result<Self> {
        if ts.len() != gs.len() {
            return Err(Error::Grid("grid and value lists differ in length"));
        }
        if ts.len() < 2 {
            return Err(Error::Grid("sample needs at least two nodes"));
        }
        for &x in ts.iter().chain(gs.iter()) {
            if !x.is_finite() {
                return Err(Error::Grid("grid and values must be finite"));
            }
        }
        for w in ts.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::Grid("grid must be strictly increasing"));
            }
        }
        if gs.iter().any(|&g| g < 0.0) {
            return Err(Error::Grid("values must be non-negative"));
        }
        Ok(SampledFunction { ts, gs })
    }

    pub fn ts(&self) -> &[f64] {
        &self.ts
    }

    pub fn gs(&self) -> &[f64] {
        &self.gs
    }

    pub fn len(&self) -> usize {
        self.ts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires two nodes
    }

    /// Left end of the grid.
    pub fn a(&self) -> f64 {
        self.ts[0]
    }

    /// Right end of the grid.
    pub fn b(&self) -> f64 {
        self.ts[self.ts.len() - 1]
    }

    pub fn min_value(&self) -> f64 {
        self.gs.iter().fold(f64::INFINITY, |m, &g| math::min(m, g))
    }

    pub fn max_value(&self) -> f64 {
        self.gs
            .iter()
            .fold(f64::NEG_INFINITY, |m, &g| math::max(m, g))
    }

    pub fn max_spacing(&self) -> f64 {
        self.ts
            .windows(2)
            .fold(0.0, |m, w| math::max(m, w[1] - w[0]))
    }

    /// The common step of a uniform grid, or a grid error when any spacing
    /// deviates from `(b - a)/(n - 1)` by more than 1e-9 relative.
    pub fn uniform_step(&self) -> Result<f64> {
        let h = (self.b() - self.a()) / (self.len() - 1) as f64;
        for w in self.ts.windows(2) {
            if math::abs((w[1] - w[0]) / h - 1.0) > 1e-9 {
                return Err(Error::Grid("grid spacing is not uniform"));
            }
        }
        Ok(h)
    }
}

/// Outcome of the consecutive-node slope check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonexpandingCheck {
    pub ok: bool,
    /// First consecutive pair `(i, i+1)` violating the slope bound.
    pub first_violation: Option<(usize, usize)>,
    /// Largest `|Δg| - Δt` over consecutive pairs (positive = violation).
    pub worst_slack: f64,
}

/// Checks `|g(t_{i+1}) - g(t_i)| <= (t_{i+1} - t_i)·(1 + tol)` on every
/// consecutive pair. On a grid this implies the bound for all pairs.
pub fn is_nonexpanding(f: &SampledFunction, tol: f64) -> NonexpandingCheck {
    let (ts, gs) = (f.ts(), f.gs());
    let mut first = None;
    let mut worst = f64::NEG_INFINITY;
    for i in 0..ts.len() - 1 {
        let dt = ts[i + 1] - ts[i];
        let dg = math::abs(gs[i + 1] - gs[i]);
        worst = math::max(worst, dg - dt);
        if dg > dt * (1.0 + tol) && first.is_none() {
            first = Some((i, i + 1));
        }
    }
    NonexpandingCheck {
        ok: first.is_none(),
        first_violation: first,
        worst_slack: worst,
    }
}

/// The endpoint condition `b - a <= g(a) + g(b)` (within [`TWO_POINT_TOL`]).
pub fn endpoint_condition(f: &SampledFunction) -> bool {
    endpoint_slack(f) <= TWO_POINT_TOL
}

/// Deficit `(b - a) - g(a) - g(b)`; positive means the condition fails.
pub fn endpoint_slack(f: &SampledFunction) -> f64 {
    (f.b() - f.a()) - f.gs()[0] - f.gs()[f.len() - 1]
}

/// Verdict of a distance-like check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceLikeReport {
    pub nonexpanding: bool,
    pub endpoint_ok: bool,
    /// Set only when the brute-force oracle was run.
    pub pairwise_ok: Option<bool>,
    /// Lexicographically smallest violating index pair found.
    pub first_violation: Option<(usize, usize)>,
    /// Largest deficit over the checks performed (positive = violation).
    pub worst_slack: f64,
}

impl DistanceLikeReport {
    /// Distance-like by the shortcut route: nonexpanding plus endpoint.
    pub fn distance_like(&self) -> bool {
        self.nonexpanding && self.endpoint_ok
    }
}

/// Distance-like check via the shortcut: consecutive nonexpanding plus the
/// endpoint condition. `pairwise_ok` is left unset.
pub fn is_distance_like(f: &SampledFunction, tol: f64) -> DistanceLikeReport {
    let ne = is_nonexpanding(f, tol);
    let ep_slack = endpoint_slack(f);
    let endpoint_ok = ep_slack <= TWO_POINT_TOL;
    let mut first = ne.first_violation;
    if !endpoint_ok {
        let ep_pair = (0, f.len() - 1);
        first = match first {
            Some(p) if p <= ep_pair => Some(p),
            _ => Some(ep_pair),
        };
    }
    DistanceLikeReport {
        nonexpanding: ne.ok,
        endpoint_ok,
        pairwise_ok: None,
        first_violation: first,
        worst_slack: math::max(ne.worst_slack, ep_slack),
    }
}

/// Outcome of the brute-force all-pairs oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairwiseCheck {
    /// Both conditions hold over every grid pair.
    pub ok: bool,
    /// The additive bound `|ti - tj| <= gi + gj` alone.
    pub two_point_ok: bool,
    /// The slope bound `|gi - gj| <= |ti - tj|` alone.
    pub nonexpanding_ok: bool,
    /// Lexicographically smallest pair violating either condition.
    pub first_violation: Option<(usize, usize)>,
    pub worst_slack: f64,
}

/// Checks both distance-like conditions over every grid pair `(i, j)`,
/// `i < j`, in lexicographic order. Quadratic cost; callers cap the grid.
pub fn pairwise_oracle(f: &SampledFunction, tol: f64) -> PairwiseCheck {
    let (ts, gs) = (f.ts(), f.gs());
    let n = ts.len();
    let mut first = None;
    let mut two_point_ok = true;
    let mut nonexpanding_ok = true;
    let mut worst = f64::NEG_INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let dt = ts[j] - ts[i];
            let slope_deficit = math::abs(gs[j] - gs[i]) - dt;
            let sum_deficit = dt - gs[i] - gs[j];
            worst = math::max(worst, math::max(slope_deficit, sum_deficit));
            let slope_bad = math::abs(gs[j] - gs[i]) > dt * (1.0 + tol);
            let sum_bad = sum_deficit > TWO_POINT_TOL;
            if slope_bad {
                nonexpanding_ok = false;
            }
            if sum_bad {
                two_point_ok = false;
            }
            if (slope_bad || sum_bad) && first.is_none() {
                first = Some((i, j));
            }
        }
    }
    PairwiseCheck {
        ok: two_point_ok && nonexpanding_ok,
        two_point_ok,
        nonexpanding_ok,
        first_violation: first,
        worst_slack: worst,
    }
}
