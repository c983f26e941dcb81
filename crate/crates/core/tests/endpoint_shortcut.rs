//! The endpoint shortcut against the brute-force pairwise oracle: for
//! nonexpanding samples the single endpoint condition decides the additive
//! two-point bound for every pair, and a failing sample is repaired by
//! adding half its endpoint deficit.

use curvcmp_core::{
    endpoint_condition, is_distance_like, is_nonexpanding, pairwise_oracle, Lcg64, SampledFunction,
};

/// Random nonexpanding piecewise-linear sample: slopes drawn from
/// `[-1, 1]`, values clamped at zero (clamping only shrinks increments).
fn random_nonexpanding(rng: &mut Lcg64, min_nodes: usize, max_nodes: usize) -> SampledFunction {
    let n = min_nodes + rng.below(max_nodes - min_nodes + 1);
    let mut ts = Vec::with_capacity(n);
    let mut gs = Vec::with_capacity(n);
    let mut t = rng.range(-1.0, 1.0);
    let mut g = rng.range(0.0, 1.5);
    ts.push(t);
    gs.push(g);
    for _ in 1..n {
        let dt = rng.range(0.001, 0.02);
        let slope = rng.range(-1.0, 1.0);
        t += dt;
        g = (g + slope * dt).max(0.0);
        ts.push(t);
        gs.push(g);
    }
    SampledFunction::new(ts, gs).unwrap()
}

#[test]
fn endpoint_condition_decides_the_two_point_bound() {
    let mut rng = Lcg64::new(0x1e44a);
    let mut failures_seen = 0;
    for _ in 0..300 {
        let f = random_nonexpanding(&mut rng, 50, 500);
        assert!(
            is_nonexpanding(&f, 1e-9).ok,
            "generator must be nonexpanding"
        );
        let shortcut = endpoint_condition(&f);
        let oracle = pairwise_oracle(&f, 1e-9);
        assert!(oracle.nonexpanding_ok);
        assert_eq!(
            shortcut, oracle.two_point_ok,
            "endpoint shortcut disagrees with the all-pairs bound"
        );
        if !shortcut {
            failures_seen += 1;
        }
    }
    assert!(
        failures_seen > 0,
        "generator never produced a failing sample"
    );
}

#[test]
fn shift_by_half_the_deficit_repairs_the_sample() {
    let mut rng = Lcg64::new(0x5417);
    let mut repaired = 0;
    while repaired < 50 {
        let f = random_nonexpanding(&mut rng, 50, 300);
        let report = is_distance_like(&f, 1e-9);
        if report.distance_like() || !report.nonexpanding {
            continue;
        }
        let sigma = report.worst_slack;
        assert!(sigma > 0.0, "failing sample must have a positive deficit");
        let lifted: Vec<f64> = f.gs().iter().map(|g| g + sigma / 2.0 + 1e-9).collect();
        let lifted = SampledFunction::new(f.ts().to_vec(), lifted).unwrap();
        assert!(
            is_distance_like(&lifted, 1e-9).distance_like(),
            "adding sigma/2 + eps must make the sample distance-like"
        );
        assert!(pairwise_oracle(&lifted, 1e-9).ok);
        repaired += 1;
    }
}

#[test]
fn shortcut_route_never_contradicts_the_oracle() {
    // nonexpanding + endpoint implies the full pairwise property
    let mut rng = Lcg64::new(0xace);
    for _ in 0..200 {
        let f = random_nonexpanding(&mut rng, 50, 200);
        let report = is_distance_like(&f, 1e-9);
        if report.distance_like() {
            assert!(pairwise_oracle(&f, 1e-9).ok);
        }
    }
}
