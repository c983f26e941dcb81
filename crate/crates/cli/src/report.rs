//! JSON report assembly. Keys are snake_case; numbers are plain decimals
//! (reports never contain NaN or infinities by construction).

use curvcmp_core::{
    AuditReport, DistanceLikeReport, ThresholdResult, ThresholdSide, Verdict, VerdictKind,
    WitnessKind,
};

/// Shortest round-trip decimal form of a finite value.
pub fn num(x: f64) -> String {
    debug_assert!(x.is_finite());
    format!("{x}")
}

pub fn kind_str(kind: VerdictKind) -> &'static str {
    match kind {
        VerdictKind::UpperSatisfied => "upper_satisfied",
        VerdictKind::LowerSatisfied => "lower_satisfied",
        VerdictKind::Equality => "equality",
        VerdictKind::Neither => "neither",
    }
}

pub fn witness_str(kind: WitnessKind) -> &'static str {
    match kind {
        WitnessKind::Hyperbolic => "hyperbolic",
        WitnessKind::Euclidean => "euclidean",
        WitnessKind::Spherical => "spherical",
    }
}

pub fn side_str(side: ThresholdSide) -> &'static str {
    match side {
        ThresholdSide::Upper => "upper",
        ThresholdSide::Lower => "lower",
    }
}

/// Oracle outcome attached to a validate report: verdict, node count,
/// first violating pair (original grid indices).
pub type PairwiseOutcome = (bool, usize, Option<(usize, usize)>);

fn pair(first: Option<(usize, usize)>) -> String {
    match first {
        Some((i, j)) => format!("[{i},{j}]"),
        None => "null".into(),
    }
}

pub fn fit_json(k: f64, u: f64, v: f64, r1: f64, r2: f64) -> String {
    format!(
        "{{\"k\":{},\"u\":{},\"v\":{},\"residuals\":[{},{}]}}\n",
        num(k),
        num(u),
        num(v),
        num(r1),
        num(r2)
    )
}

pub fn validate_json(report: &DistanceLikeReport, pairwise: Option<PairwiseOutcome>) -> String {
    let (pairwise_ok, pairwise_nodes) = match pairwise {
        Some((ok, nodes, _)) => (ok.to_string(), nodes.to_string()),
        None => ("null".into(), "null".into()),
    };
    // prefer the shortcut report's pair; fall back to the oracle's
    let first = report.first_violation.or(pairwise.and_then(|(_, _, p)| p));
    format!(
        "{{\"distance_like\":{},\"nonexpanding\":{},\"endpoint_ok\":{},\"pairwise_ok\":{},\"pairwise_nodes\":{},\"first_violation\":{},\"worst_slack\":{}}}\n",
        report.distance_like(),
        report.nonexpanding,
        report.endpoint_ok,
        pairwise_ok,
        pairwise_nodes,
        pair(first),
        num(report.worst_slack),
    )
}

pub fn check_json(
    verdict: &Verdict,
    witness_kind: WitnessKind,
    witness_monotone: bool,
    witness_tol: f64,
) -> String {
    format!(
        "{{\"kind\":\"{}\",\"min_residual\":{},\"max_residual\":{},\"tol\":{},\"witness_kind\":\"{}\",\"witness_monotone\":{},\"witness_tol\":{}}}\n",
        kind_str(verdict.kind),
        num(verdict.min_residual),
        num(verdict.max_residual),
        num(verdict.tol),
        witness_str(witness_kind),
        witness_monotone,
        num(witness_tol),
    )
}

pub fn audit_json(report: &AuditReport) -> String {
    let mut mismatches = String::from("[");
    for (i, m) in report.mismatches.iter().enumerate() {
        if i > 0 {
            mismatches.push(',');
        }
        mismatches.push_str(&format!(
            "{{\"t1\":{},\"t2\":{},\"gap\":{}}}",
            num(m.t1),
            num(m.t2),
            num(m.gap)
        ));
    }
    mismatches.push(']');
    format!(
        "{{\"verdict\":{{\"kind\":\"{}\",\"min_residual\":{},\"max_residual\":{},\"tol\":{}}},\"chords_tested\":{},\"agreements\":{},\"mismatches\":{},\"tol\":{}}}\n",
        kind_str(report.verdict.kind),
        num(report.verdict.min_residual),
        num(report.verdict.max_residual),
        num(report.verdict.tol),
        report.chords_tested,
        report.agreements,
        mismatches,
        num(report.tol),
    )
}

pub fn estimate_json(r: &ThresholdResult) -> String {
    format!(
        "{{\"side\":\"{}\",\"k_lo\":{},\"k_hi\":{},\"iterations\":{}}}\n",
        side_str(r.side),
        num(r.k_lo),
        num(r.k_hi),
        r.iterations,
    )
}
