//! Comparison functions of the three constant-curvature model planes and
//! numerical checks of the differential inequalities they characterize.
//!
//! The crate evaluates and fits the model-space comparison functions
//! `g_k` for every curvature sign, validates the distance-like property
//! of sampled 1-dimensional functions, classifies the inequality
//! `g″ ≷ (1 - g′²)·ct_k(g)` on uniform samples, audits its equivalence
//! with the chordal comparison `g ≷ g_k^{t1,t2}`, and brackets the
//! critical curvature at which an inequality side starts to hold.
//!
//! `no_std` + `alloc`; all routines are pure functions of their inputs.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod comparison;
pub mod distance_like;
pub mod error;
pub mod fitting;
pub mod inequality;
mod math;
pub mod model_spaces;
pub mod rng;

pub use comparison::{
    compare_on_chord, equivalence_audit, estimate_threshold, perturb, synth, AuditReport,
    ChordComparison, ChordRelation, ThresholdResult, ThresholdSide,
};
pub use distance_like::{
    endpoint_condition, is_distance_like, is_nonexpanding, pairwise_oracle, DistanceLikeReport,
    SampledFunction,
};
pub use error::{Error, Result};
pub use fitting::{fit, fit_euclidean, fit_hyperbolic, fit_spherical, ChordSpec, FitResult};
pub use inequality::{
    classify, default_tolerance, residual_series, witness_monotone, witness_series, ResidualSeries,
    Verdict, VerdictKind, WitnessKind, WitnessSeries,
};
pub use model_spaces::{
    comparison_point, eval_g, eval_g_prime, eval_g_second, geodesic_point, model_distance, rhs,
    ComparisonParams, Curvature, CurvatureSign, ModelPoint,
};
pub use rng::Lcg64;
