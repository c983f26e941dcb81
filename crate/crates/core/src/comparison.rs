//! Chordal comparison of a sample against fitted comparison functions,
//! the equivalence audit, the curvature threshold estimator, and the
//! synthetic/perturbed sample generators.
//!
//! A chord `(t1, t2)` of grid nodes is compared by fitting `g_k^{t1,t2}`
//! to the sampled values at the chord endpoints and classifying the signed
//! gap `g - g_k^{t1,t2}` over the nodes in between. The equivalence audit
//! draws seeded chords and cross-checks them against the residual verdict:
//! `UpperSatisfied` must see only `Below`/`Equal` chords, `LowerSatisfied`
//! only `Above`/`Equal`.
//!
//! The threshold estimator bisects on `k`. The right-hand side
//! `(1 - g′²)·ct_k(g)` is nonincreasing in `k`, so the residual is
//! nondecreasing in `k` and each inequality side holds on a half-line.

use alloc::vec::Vec;

use crate::distance_like::SampledFunction;
use crate::error::{Error, Result};
use crate::fitting::{fit, ChordSpec};
use crate::inequality::{classify, default_tolerance, residual_series, Verdict, VerdictKind};
use crate::math;
use crate::model_spaces::{eval_g, ComparisonParams, Curvature, PI};
use crate::rng::Lcg64;

/// Pointwise relation of a sample to the fitted chord function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordRelation {
    /// `g <= g_k^{t1,t2}` throughout (some gap below `-tol`).
    Below,
    /// `g >= g_k^{t1,t2}` throughout (some gap above `tol`).
    Above,
    /// `|g - g_k^{t1,t2}| <= tol` throughout.
    Equal,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordComparison {
    pub t1: f64,
    pub t2: f64,
    pub relation: ChordRelation,
    /// Largest signed gap `g - g_k^{t1,t2}` over the chord's nodes.
    pub max_signed_gap: f64,
    /// Smallest signed gap over the chord's nodes.
    pub min_signed_gap: f64,
}

/// A chord whose relation contradicts the residual verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordMismatch {
    pub t1: f64,
    pub t2: f64,
    /// The offending extreme gap.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub verdict: Verdict,
    pub chords_tested: usize,
    pub agreements: usize,
    pub mismatches: Vec<ChordMismatch>,
    pub tol: f64,
}

/// Side of the curvature threshold to bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdSide {
    /// `inf { k : UpperSatisfied or Equality }`.
    Upper,
    /// `sup { k : LowerSatisfied or Equality }`.
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    pub k_lo: f64,
    pub k_hi: f64,
    pub iterations: usize,
    pub side: ThresholdSide,
}

/// Samples `eval_g` on a uniform grid of `n >= 2` nodes over `[a, b]`.
pub fn synth(params: ComparisonParams, a: f64, b: f64, n: usize) -> Result<SampledFunction> {
    if n < 2 {
        return Err(Error::InvalidParams("synth needs at least two nodes"));
    }
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::InvalidParams("synth needs a finite range a < b"));
    }
    let mut ts = Vec::with_capacity(n);
    for i in 0..n {
        let t = if i == n - 1 {
            b
        } else {
            a + (b - a) * i as f64 / (n - 1) as f64
        };
        ts.push(t);
    }
    let mut gs = Vec::with_capacity(n);
    for &t in &ts {
        gs.push(eval_g(params, t)?);
    }
    SampledFunction::new(ts, gs)
}

/// Compactly supported C² cubic-spline hat with unit peak on `[-1, 1]`.
fn bump(x: f64) -> f64 {
    let ax = math::abs(x);
    if ax >= 1.0 {
        0.0
    } else if ax <= 0.5 {
        1.0 - 6.0 * x * x + 6.0 * ax * ax * ax
    } else {
        2.0 * (1.0 - ax) * (1.0 - ax) * (1.0 - ax)
    }
}

/// Adds `amplitude·bump((t - center)/width)` to the sample. The grid is
/// preserved; perturbed values must stay positive.
pub fn perturb(
    f: &SampledFunction,
    amplitude: f64,
    center: f64,
    width: f64,
) -> Result<SampledFunction> {
    if width.is_nan() || width <= 0.0 {
        return Err(Error::InvalidParams("perturbation width must be positive"));
    }
    let gs: Vec<f64> = f
        .ts()
        .iter()
        .zip(f.gs().iter())
        .map(|(&t, &g)| g + amplitude * bump((t - center) / width))
        .collect();
    if gs.iter().any(|&g| g <= 0.0) {
        return Err(Error::Domain("perturbed values must remain positive"));
    }
    SampledFunction::new(f.ts().to_vec(), gs)
}

fn find_node(ts: &[f64], t: f64) -> Result<usize> {
    let tol = 1e-9 * (1.0 + math::abs(t));
    let idx = ts.partition_point(|&x| x < t);
    for i in [idx.saturating_sub(1), idx] {
        if i < ts.len() && math::abs(ts[i] - t) <= tol {
            return Ok(i);
        }
    }
    Err(Error::InvalidParams("chord endpoint is not a grid node"))
}

fn chord_by_index(
    f: &SampledFunction,
    k: Curvature,
    i1: usize,
    i2: usize,
    tol: f64,
) -> Result<ChordComparison> {
    let (ts, gs) = (f.ts(), f.gs());
    let (t1, t2) = (ts[i1], ts[i2]);
    if gs[i1..=i2].iter().any(|&g| g <= 0.0) {
        return Err(Error::Domain("sample must be positive on the chord"));
    }
    let spec = ChordSpec::new(k, t1, t2, gs[i1], gs[i2])?;
    let fitted = fit(&spec)?;
    let mut max_gap = f64::NEG_INFINITY;
    let mut min_gap = f64::INFINITY;
    for i in i1..=i2 {
        let gap = gs[i] - eval_g(fitted.params, ts[i])?;
        max_gap = math::max(max_gap, gap);
        min_gap = math::min(min_gap, gap);
    }
    let relation = if max_gap <= tol && min_gap >= -tol {
        ChordRelation::Equal
    } else if max_gap <= tol {
        ChordRelation::Below
    } else if min_gap >= -tol {
        ChordRelation::Above
    } else {
        ChordRelation::Mixed
    };
    Ok(ChordComparison {
        t1,
        t2,
        relation,
        max_signed_gap: max_gap,
        min_signed_gap: min_gap,
    })
}

/// Fits `g_k^{t1,t2}` to the sampled values at grid nodes `t1 < t2` and
/// classifies the signed gap over every node in between.
pub fn compare_on_chord(
    f: &SampledFunction,
    k: Curvature,
    t1: f64,
    t2: f64,
    tol: f64,
) -> Result<ChordComparison> {
    let i1 = find_node(f.ts(), t1)?;
    let i2 = find_node(f.ts(), t2)?;
    if i1 >= i2 {
        return Err(Error::InvalidParams("chord requires t1 < t2"));
    }
    chord_by_index(f, k, i1, i2, tol)
}

/// Draws `pair_count` seeded grid-node chords, compares each against the
/// residual verdict, and reports disagreements.
///
/// Chords within the tolerance band (`Equal`) agree with every verdict;
/// a `Neither` verdict makes no global claim, so nothing can contradict
/// it. Reports are deterministic: chords are ordered by `(t1, t2)` and
/// equal seeds yield equal reports.
pub fn equivalence_audit(
    f: &SampledFunction,
    k: Curvature,
    pair_count: usize,
    seed: u64,
    tol: f64,
) -> Result<AuditReport> {
    if pair_count == 0 {
        return Err(Error::InvalidParams("audit needs at least one chord"));
    }
    let verdict = classify(&residual_series(f, k, 0.0)?, tol);
    let n = f.len();
    let mut rng = Lcg64::new(seed);
    let mut pairs = Vec::with_capacity(pair_count);
    for _ in 0..pair_count {
        let i = rng.below(n);
        let mut j = rng.below(n);
        while j == i {
            j = rng.below(n);
        }
        pairs.push((i.min(j), i.max(j)));
    }
    pairs.sort_unstable();

    let mut mismatches = Vec::new();
    for &(i1, i2) in &pairs {
        let chord = chord_by_index(f, k, i1, i2, tol)?;
        let conflict = match verdict.kind {
            VerdictKind::UpperSatisfied => {
                (chord.max_signed_gap > tol).then_some(chord.max_signed_gap)
            }
            VerdictKind::LowerSatisfied => {
                (chord.min_signed_gap < -tol).then_some(chord.min_signed_gap)
            }
            VerdictKind::Equality => (chord.relation != ChordRelation::Equal).then_some(
                if math::abs(chord.max_signed_gap) >= math::abs(chord.min_signed_gap) {
                    chord.max_signed_gap
                } else {
                    chord.min_signed_gap
                },
            ),
            VerdictKind::Neither => None,
        };
        if let Some(gap) = conflict {
            mismatches.push(ChordMismatch {
                t1: chord.t1,
                t2: chord.t2,
                gap,
            });
        }
    }
    Ok(AuditReport {
        verdict,
        chords_tested: pairs.len(),
        agreements: pairs.len() - mismatches.len(),
        mismatches,
        tol,
    })
}

/// Bisects on `k` for the boundary of the half-line on which the chosen
/// inequality side holds, using the sample's default classification
/// tolerance. The endpoints must classify differently.
pub fn estimate_threshold(
    f: &SampledFunction,
    side: ThresholdSide,
    k_min: f64,
    k_max: f64,
    k_tol: f64,
) -> Result<ThresholdResult> {
    if !k_min.is_finite() || !k_max.is_finite() || k_min >= k_max {
        return Err(Error::InvalidParams(
            "threshold range requires k_min < k_max",
        ));
    }
    if k_tol.is_nan() || k_tol <= 0.0 {
        return Err(Error::InvalidParams("k_tol must be positive"));
    }
    if k_max > 0.0 && math::sqrt(k_max) * f.max_value() >= PI {
        return Err(Error::Domain(
            "spherical guard sqrt(k_max)*max(g) < pi violated",
        ));
    }
    let tol = default_tolerance(f)?;
    let satisfied = |k: f64| -> Result<bool> {
        let verdict = classify(&residual_series(f, Curvature::new(k)?, 0.0)?, tol);
        Ok(match side {
            ThresholdSide::Upper => matches!(
                verdict.kind,
                VerdictKind::UpperSatisfied | VerdictKind::Equality
            ),
            ThresholdSide::Lower => matches!(
                verdict.kind,
                VerdictKind::LowerSatisfied | VerdictKind::Equality
            ),
        })
    };
    let at_min = satisfied(k_min)?;
    let at_max = satisfied(k_max)?;
    // the side holds on an upper half-line of k (upper) or a lower one (lower)
    let expected = match side {
        ThresholdSide::Upper => (false, true),
        ThresholdSide::Lower => (true, false),
    };
    if (at_min, at_max) != expected {
        return Err(Error::Bracket(
            "endpoints classify identically; no threshold inside the range",
        ));
    }
    let mut lo = k_min;
    let mut hi = k_max;
    let mut iterations = 0;
    while hi - lo > k_tol && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        let sat = satisfied(mid)?;
        let keep_low = match side {
            ThresholdSide::Upper => !sat,
            ThresholdSide::Lower => sat,
        };
        if keep_low {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(ThresholdResult {
        k_lo: lo,
        k_hi: hi,
        iterations,
        side,
    })
}
