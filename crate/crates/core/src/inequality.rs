//! Differential-inequality residuals on sampled functions.
//!
//! For a sample of `g` on a uniform grid the residual series is
//! `r_i = FD²(g)(t_i) - rhs(k, g(t_i), FD¹(g)(t_i))` at interior nodes,
//! with order-2 central stencils. `r >= 0` everywhere means `g` satisfies
//! `g″ >= (1 - g′²)·ct_k(g)`, the side on which the fitted comparison
//! function bounds `g` from above ("curvature <= k"); `r <= 0` is the
//! opposite side. Exact comparison functions give `r = O(h²)`.
//!
//! The witness series are the monotone auxiliary functions of the
//! equivalence proofs: their nondecrease is equivalent to the `>=`
//! inequality, and on exact comparison functions they are constant
//! (`1/v` hyperbolic, `-v·√k` spherical, `-u` flat).

use alloc::vec::Vec;

use crate::distance_like::SampledFunction;
use crate::error::{Error, Result};
use crate::math;
use crate::model_spaces::{rhs, Curvature, CurvatureSign, PI};

/// Finite-difference stencil descriptor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilInfo {
    pub order: u32,
    pub step: f64,
}

/// Residual values at the interior grid nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualSeries {
    pub ts: Vec<f64>,
    pub rs: Vec<f64>,
    pub stencil: StencilInfo,
}

/// Four-way classification of a residual series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    /// `g″ >= rhs` holds everywhere: the comparison function bounds `g`
    /// from above (curvature `<= k` side).
    UpperSatisfied,
    /// `g″ <= rhs` holds everywhere (curvature `>= k` side).
    LowerSatisfied,
    /// Both hold within tolerance: `g` solves the differential equation.
    Equality,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub min_residual: f64,
    pub max_residual: f64,
    pub tol: f64,
}

/// Which proof witness a series carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// `h(t) = e^(-√-k·t)·(cosh(√-k·g) + g′·sinh(√-k·g))`, `k < 0`.
    Hyperbolic,
    /// `w(t) = g·g′ - t`, the flat analogue (`w′ = g′² + g·g″ - 1`).
    Euclidean,
    /// `H(t) = g′·cos(√k·t)·sin(√k·g) - sin(√k·t)·cos(√k·g)`, `k > 0`.
    Spherical,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessSeries {
    pub ts: Vec<f64>,
    pub ws: Vec<f64>,
    pub kind: WitnessKind,
}

fn uniform_checked(f: &SampledFunction) -> Result<f64> {
    if f.len() < 3 {
        return Err(Error::Grid(
            "need at least three nodes for central stencils",
        ));
    }
    f.uniform_step()
}

fn positive_values(f: &SampledFunction, floor: f64) -> Result<()> {
    if f.min_value() <= floor {
        return Err(Error::Domain("sampled values must be positive"));
    }
    Ok(())
}

/// Residual `FD²(g) - rhs(k, g, FD¹(g))` at every interior node.
///
/// Requires a uniform grid, values above `tol_domain >= 0`, and for
/// `k > 0` that `√k·max(g) < π` so the right-hand side is defined.
pub fn residual_series(
    f: &SampledFunction,
    k: Curvature,
    tol_domain: f64,
) -> Result<ResidualSeries> {
    if tol_domain.is_nan() || tol_domain < 0.0 {
        return Err(Error::InvalidParams("tol_domain must be >= 0"));
    }
    let h = uniform_checked(f)?;
    positive_values(f, tol_domain)?;
    if k.sign() == CurvatureSign::Positive && k.sqrt_abs() * f.max_value() >= PI {
        return Err(Error::Domain(
            "spherical guard sqrt(k)*max(g) < pi violated",
        ));
    }
    let (ts, gs) = (f.ts(), f.gs());
    let n = ts.len();
    let mut out_ts = Vec::with_capacity(n - 2);
    let mut out_rs = Vec::with_capacity(n - 2);
    for i in 1..n - 1 {
        let fd2 = (gs[i + 1] - 2.0 * gs[i] + gs[i - 1]) / (h * h);
        let fd1 = (gs[i + 1] - gs[i - 1]) / (2.0 * h);
        out_ts.push(ts[i]);
        out_rs.push(fd2 - rhs(k, gs[i], fd1)?);
    }
    Ok(ResidualSeries {
        ts: out_ts,
        rs: out_rs,
        stencil: StencilInfo { order: 2, step: h },
    })
}

/// Classifies a residual series against a tolerance band.
pub fn classify(rs: &ResidualSeries, tol: f64) -> Verdict {
    let mut min_r = f64::INFINITY;
    let mut max_r = f64::NEG_INFINITY;
    for &r in &rs.rs {
        min_r = math::min(min_r, r);
        max_r = math::max(max_r, r);
    }
    let upper = min_r >= -tol;
    let lower = max_r <= tol;
    let kind = match (upper, lower) {
        (true, true) => VerdictKind::Equality,
        (true, false) => VerdictKind::UpperSatisfied,
        (false, true) => VerdictKind::LowerSatisfied,
        (false, false) => VerdictKind::Neither,
    };
    Verdict {
        kind,
        min_residual: min_r,
        max_residual: max_r,
        tol,
    }
}

/// Default classification tolerance for a sample: `max(1e-6, 10·h²·scale)`
/// with `scale = max(1, max|FD²(g)|)`, tying the band to the stencil error.
pub fn default_tolerance(f: &SampledFunction) -> Result<f64> {
    let h = uniform_checked(f)?;
    let gs = f.gs();
    let mut scale = 1.0;
    for i in 1..gs.len() - 1 {
        let fd2 = (gs[i + 1] - 2.0 * gs[i] + gs[i - 1]) / (h * h);
        scale = math::max(scale, math::abs(fd2));
    }
    Ok(math::max(1e-6, 10.0 * h * h * scale))
}

/// First derivative at every node: central inside, one-sided order-2 at
/// the two endpoints.
fn derivative_series(gs: &[f64], h: f64) -> Vec<f64> {
    let n = gs.len();
    let mut gp = Vec::with_capacity(n);
    gp.push((-3.0 * gs[0] + 4.0 * gs[1] - gs[2]) / (2.0 * h));
    for i in 1..n - 1 {
        gp.push((gs[i + 1] - gs[i - 1]) / (2.0 * h));
    }
    gp.push((3.0 * gs[n - 1] - 4.0 * gs[n - 2] + gs[n - 3]) / (2.0 * h));
    gp
}

/// The proof witness of the matching curvature sign at every grid node.
///
/// For `k > 0` additionally requires `√k·max(|a|, |b|) < π/2` so the
/// prefactor `cos(√k·t)` keeps one sign on the whole interval.
pub fn witness_series(f: &SampledFunction, k: Curvature) -> Result<WitnessSeries> {
    let h = uniform_checked(f)?;
    positive_values(f, 0.0)?;
    let s = k.sqrt_abs();
    if k.sign() == CurvatureSign::Positive {
        if s * f.max_value() >= PI {
            return Err(Error::Domain(
                "spherical guard sqrt(k)*max(g) < pi violated",
            ));
        }
        if s * math::max(math::abs(f.a()), math::abs(f.b())) >= PI / 2.0 {
            return Err(Error::Domain(
                "spherical witness requires sqrt(k)*max(|a|,|b|) < pi/2",
            ));
        }
    }
    let (ts, gs) = (f.ts(), f.gs());
    let gp = derivative_series(gs, h);
    let (kind, ws) = match k.sign() {
        CurvatureSign::Negative => {
            let ws = ts
                .iter()
                .zip(gs.iter().zip(gp.iter()))
                .map(|(&t, (&g, &p))| {
                    math::exp(-s * t) * (math::cosh(s * g) + p * math::sinh(s * g))
                })
                .collect();
            (WitnessKind::Hyperbolic, ws)
        }
        CurvatureSign::Zero => {
            let ws = ts
                .iter()
                .zip(gs.iter().zip(gp.iter()))
                .map(|(&t, (&g, &p))| g * p - t)
                .collect();
            (WitnessKind::Euclidean, ws)
        }
        CurvatureSign::Positive => {
            let ws = ts
                .iter()
                .zip(gs.iter().zip(gp.iter()))
                .map(|(&t, (&g, &p))| {
                    p * math::cos(s * t) * math::sin(s * g) - math::sin(s * t) * math::cos(s * g)
                })
                .collect();
            (WitnessKind::Spherical, ws)
        }
    };
    Ok(WitnessSeries {
        ts: ts.to_vec(),
        ws,
        kind,
    })
}

/// True when the witness never decreases by more than `tol` per step.
pub fn witness_monotone(ws: &WitnessSeries, tol: f64) -> bool {
    ws.ws.windows(2).all(|w| w[1] >= w[0] - tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comparison::synth;
    use crate::model_spaces::{ComparisonParams, Curvature};
    use alloc::vec;

    fn curv(k: f64) -> Curvature {
        Curvature::new(k).unwrap()
    }

    fn params(k: f64, u: f64, v: f64) -> ComparisonParams {
        ComparisonParams::new(curv(k), u, v).unwrap()
    }

    fn constant(c: f64, a: f64, b: f64, n: usize) -> SampledFunction {
        let ts: Vec<f64> = (0..n)
            .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
            .collect();
        SampledFunction::new(ts, vec![c; n]).unwrap()
    }

    #[test]
    fn exact_hyperbolic_sample_solves_its_equation() {
        let f = synth(params(-1.0, 0.0, 1.0), 1.0, 2.0, 201).unwrap();
        let rs = residual_series(&f, curv(-1.0), 0.0).unwrap();
        assert_eq!(rs.rs.len(), 199);
        let max = rs.rs.iter().fold(0.0f64, |m, r| m.max(r.abs()));
        assert!(max <= 1e-4, "max residual {max}");
    }

    #[test]
    fn pole_sample_has_zero_residual() {
        let f = constant(PI / 2.0, 0.0, 1.0, 51);
        let rs = residual_series(&f, curv(1.0), 0.0).unwrap();
        assert!(rs.rs.iter().all(|r| r.abs() < 1e-15));
    }

    #[test]
    fn constant_one_against_flat_space() {
        let f = constant(1.0, 0.0, 1.0, 51);
        let rs = residual_series(&f, curv(0.0), 0.0).unwrap();
        assert!(
            rs.rs.iter().all(|r| (r + 1.0).abs() < 1e-12),
            "0 - (1 - 0)/1"
        );
    }

    #[test]
    fn classify_trivial_bands() {
        let zero = ResidualSeries {
            ts: vec![0.5],
            rs: vec![0.0],
            stencil: StencilInfo {
                order: 2,
                step: 0.1,
            },
        };
        assert_eq!(classify(&zero, 1e-6).kind, VerdictKind::Equality);
        let neg = ResidualSeries {
            ts: vec![0.5],
            rs: vec![-1.0],
            stencil: StencilInfo {
                order: 2,
                step: 0.1,
            },
        };
        let v = classify(&neg, 1e-6);
        assert_eq!(v.kind, VerdictKind::LowerSatisfied);
        assert_eq!(v.min_residual, -1.0);
        assert_eq!(v.max_residual, -1.0);
    }

    #[test]
    fn flat_sample_against_negative_curvature_is_lower() {
        // ct_{-1} > ct_0 pointwise, so g'' - rhs_{-1} < 0 on the sample
        let f = synth(params(0.0, 0.36, 0.48), 0.0, 1.0, 401).unwrap();
        let rs = residual_series(&f, curv(-1.0), 0.0).unwrap();
        let v = classify(&rs, default_tolerance(&f).unwrap());
        assert_eq!(v.kind, VerdictKind::LowerSatisfied);
    }

    #[test]
    fn flat_sample_against_positive_curvature_is_upper() {
        let f = synth(params(0.0, 0.36, 0.48), 0.0, 1.0, 401).unwrap();
        let rs = residual_series(&f, curv(1.0), 0.0).unwrap();
        let v = classify(&rs, default_tolerance(&f).unwrap());
        assert_eq!(v.kind, VerdictKind::UpperSatisfied);
    }

    #[test]
    fn hyperbolic_witness_constant_on_exact_sample() {
        let f = synth(params(-1.0, 0.0, 1.0), 1.0, 2.0, 201).unwrap();
        let ws = witness_series(&f, curv(-1.0)).unwrap();
        assert_eq!(ws.kind, WitnessKind::Hyperbolic);
        assert!(
            ws.ws.iter().all(|w| (w - 1.0).abs() < 1e-6),
            "h = 1/v with v = 1"
        );
        assert!(witness_monotone(&ws, 1e-9));
    }

    #[test]
    fn spherical_witness_zero_at_the_pole() {
        let f = constant(PI / 2.0, 0.0, 1.0, 51);
        let ws = witness_series(&f, curv(1.0)).unwrap();
        assert_eq!(ws.kind, WitnessKind::Spherical);
        assert!(
            ws.ws.iter().all(|w| w.abs() < 1e-15),
            "-v sqrt(k) with v = 0"
        );
    }

    #[test]
    fn euclidean_witness_is_minus_u() {
        let f = synth(params(0.0, 0.36, 0.48), 0.0, 1.0, 1001).unwrap();
        let ws = witness_series(&f, curv(0.0)).unwrap();
        assert_eq!(ws.kind, WitnessKind::Euclidean);
        // g·g' = t - u for the flat chart, so w = g·g' - t = -u
        assert!(ws.ws.iter().all(|w| (w + 0.36).abs() < 1e-5));
    }

    #[test]
    fn witness_monotone_detects_decrease() {
        let ws = WitnessSeries {
            ts: vec![0.0, 1.0],
            ws: vec![0.0, -1.0],
            kind: WitnessKind::Euclidean,
        };
        assert!(!witness_monotone(&ws, 1e-9));
    }

    #[test]
    fn witness_direction_tracks_the_verdict() {
        let f = synth(params(0.0, 0.36, 0.48), 0.0, 1.0, 401).unwrap();
        // against k = 1 the flat sample is UpperSatisfied: witness nondecreasing
        let up = witness_series(&f, curv(1.0)).unwrap();
        let tol_up = 1e-9 * (1.0 + up.ws.iter().fold(0.0f64, |m, w| m.max(w.abs())));
        assert!(witness_monotone(&up, tol_up));
        // against k = -1 it is LowerSatisfied: witness strictly decreases
        let down = witness_series(&f, curv(-1.0)).unwrap();
        assert!(!witness_monotone(&down, 1e-9));
    }

    #[test]
    fn domain_guards() {
        let f = constant(0.0, 0.0, 1.0, 11);
        assert!(residual_series(&f, curv(0.0), 0.0).is_err(), "zero values");
        let tall = constant(2.0, 0.0, 1.0, 11);
        assert!(
            residual_series(&tall, curv(4.0), 0.0).is_err(),
            "sqrt(k)*g = 4 over pi"
        );
        let wide = constant(1.0, 0.0, 2.0, 11);
        assert!(
            witness_series(&wide, curv(1.0)).is_err(),
            "witness needs sqrt(k)*b < pi/2"
        );
        assert!(residual_series(&wide, curv(1.0), 0.0).is_ok());
        let nonuniform = SampledFunction::new(vec![0.0, 0.4, 1.0], vec![1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(
            residual_series(&nonuniform, curv(0.0), 0.0),
            Err(Error::Grid(_))
        ));
    }

    #[test]
    fn default_tolerance_tracks_stencil_error() {
        let f = synth(params(0.0, 0.36, 0.48), 0.0, 1.0, 1001).unwrap();
        let tol = default_tolerance(&f).unwrap();
        // h = 1e-3, max |g''| = 1/v ~ 2.08: tol = 10 h^2 scale ~ 2.1e-5
        assert!(tol > 1e-5 && tol < 1e-4, "tol = {tol}");
    }
}
