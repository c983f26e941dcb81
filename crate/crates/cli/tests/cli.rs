//! End-to-end tests of the binary: flag handling, exit codes, format
//! round-trips, and determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curvcmp"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Pulls a numeric field out of a flat JSON report.
fn json_num(json: &str, key: &str) -> f64 {
    let needle = format!("\"{key}\":");
    let start = json
        .find(&needle)
        .unwrap_or_else(|| panic!("{key} in {json}"))
        + needle.len();
    let rest = &json[start..];
    let end = rest.find([',', '}', ']']).unwrap();
    rest[..end].parse().unwrap()
}

fn tmp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("curvcmp_cli_{name}_{}", std::process::id()))
}

fn quarter_affine_csv() -> String {
    let mut csv = String::from("t,g\n");
    for i in 0..=10 {
        let t = i as f64 / 10.0;
        csv.push_str(&format!("{t},{}\n", 0.25 * (t + 1.0)));
    }
    csv
}

#[test]
fn fit_solves_the_figure_endpoints() {
    let out = run(&[
        "fit", "--k", "0", "--t1", "0", "--t2", "1", "--g1", "0.6", "--g2", "0.8",
    ]);
    assert!(out.status.success());
    let json = stdout_str(&out);
    assert!((json_num(&json, "u") - 0.36).abs() < 1e-12, "{json}");
    assert!((json_num(&json, "v") - 0.48).abs() < 1e-12, "{json}");
}

#[test]
fn fit_rejects_the_quarter_affine_triangle_with_exit_3() {
    let out = run(&[
        "fit", "--k", "0", "--t1", "0", "--t2", "1", "--g1", "0.25", "--g2", "0.5",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn synth_emits_the_on_geodesic_rows() {
    let out = run(&[
        "synth", "--k", "-1", "--u", "0", "--v", "1", "--from", "1", "--to", "2", "--n", "3",
    ]);
    assert!(out.status.success());
    let csv = stdout_str(&out);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,g"));
    for (expect_t, expect_g) in [(1.0, 1.0), (1.5, 1.5), (2.0, 2.0)] {
        let line = lines.next().unwrap();
        let (t, g) = line.split_once(',').unwrap();
        assert!((t.parse::<f64>().unwrap() - expect_t).abs() < 1e-12);
        assert!((g.parse::<f64>().unwrap() - expect_g).abs() < 1e-12);
    }
}

#[test]
fn synth_then_eval_reproduces_the_file_byte_for_byte() {
    let path = tmp_path("roundtrip.csv");
    let out = run(&[
        "synth",
        "--k",
        "-2",
        "--u",
        "0.3",
        "--v",
        "0.7",
        "--from",
        "0",
        "--to",
        "1.5",
        "--n",
        "101",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let original = std::fs::read(&path).unwrap();
    let evaled = run(&[
        "eval",
        "--k",
        "-2",
        "--u",
        "0.3",
        "--v",
        "0.7",
        "--in",
        path.to_str().unwrap(),
    ]);
    assert!(evaled.status.success());
    assert_eq!(
        evaled.stdout, original,
        "17-digit CSV must round-trip bit-exactly"
    );
    std::fs::remove_file(&path).ok();
}

#[test]
fn synth_then_check_yields_equality_for_matching_curvature() {
    for (k, u, v) in [
        ("-1", "0.4", "0.9"),
        ("0", "0.36", "0.48"),
        ("1", "0.3", "0.4"),
    ] {
        let path = tmp_path(&format!("synthcheck_{k}.csv"));
        let out = run(&[
            "synth",
            "--k",
            k,
            "--u",
            u,
            "--v",
            v,
            "--from",
            "0",
            "--to",
            "1",
            "--n",
            "501",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let check = run(&["check", "--k", k, "--in", path.to_str().unwrap()]);
        assert!(check.status.success());
        let json = stdout_str(&check);
        assert!(json.contains("\"kind\":\"equality\""), "k = {k}: {json}");
        assert!(
            json.contains("\"witness_monotone\":true"),
            "k = {k}: {json}"
        );
        std::fs::remove_file(&path).ok();
    }
}

#[test]
fn validate_rejects_the_quarter_affine_function() {
    let path = tmp_path("quarter.csv");
    std::fs::write(&path, quarter_affine_csv()).unwrap();
    let out = run(&["validate", "--in", path.to_str().unwrap(), "--pairwise"]);
    assert!(out.status.success());
    let json = stdout_str(&out);
    assert!(json.contains("\"distance_like\":false"), "{json}");
    assert!(json.contains("\"nonexpanding\":true"), "{json}");
    assert!(json.contains("\"endpoint_ok\":false"), "{json}");
    assert!(json.contains("\"pairwise_ok\":false"), "{json}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn validate_reads_stdin() {
    let mut child = bin()
        .args(["validate", "--in", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"t,g\n0,1\n0.5,1\n1,1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("\"distance_like\":true"));
}

#[test]
fn estimate_recovers_the_constant_function_threshold() {
    let path = tmp_path("const.csv");
    let mut csv = String::from("t,g\n");
    let half_pi = std::f64::consts::FRAC_PI_2;
    for i in 0..=2000 {
        csv.push_str(&format!("{},{half_pi}\n", i as f64 / 2000.0));
    }
    std::fs::write(&path, csv).unwrap();
    let out = run(&[
        "estimate",
        "--side",
        "upper",
        "--kmin",
        "0.5",
        "--kmax",
        "2",
        "--ktol",
        "1e-4",
        "--in",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json = stdout_str(&out);
    let mid = 0.5 * (json_num(&json, "k_lo") + json_num(&json, "k_hi"));
    assert!((mid - 1.0).abs() < 2e-4, "k* = (pi/(2c))^2 = 1, got {mid}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn figure_single_curve_passes_through_custom_endpoints() {
    let svg_path = tmp_path("single.svg");
    let csv_path = tmp_path("single.csv");
    let out = run(&[
        "figure",
        "--out",
        svg_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
        "--ks",
        "0",
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 1);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let first_row = csv.lines().nth(1).unwrap();
    let g0: f64 = first_row.split(',').nth(1).unwrap().parse().unwrap();
    assert!((g0 - 0.6).abs() < 1e-12);
    let last_row = csv.lines().last().unwrap();
    let g1: f64 = last_row.split(',').nth(1).unwrap().parse().unwrap();
    assert!((g1 - 0.8).abs() < 1e-12);
    std::fs::remove_file(&svg_path).ok();
    std::fs::remove_file(&csv_path).ok();
}

#[test]
fn figure_warns_and_skips_infeasible_curvatures() {
    let svg_path = tmp_path("infeasible.svg");
    let out = run(&[
        "figure",
        "--out",
        svg_path.to_str().unwrap(),
        "--ks",
        "0",
        "--g1",
        "0.25",
        "--g2",
        "0.5",
    ]);
    assert!(out.status.success(), "per-curve infeasibility is not fatal");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("warning"), "{stderr}");
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 0, "empty plot area");
    assert!(svg.contains("<line"), "axes are still drawn");
    std::fs::remove_file(&svg_path).ok();
    let csv = svg_path.with_extension("csv");
    std::fs::remove_file(&csv).ok();
}

#[test]
fn exit_codes_are_stable() {
    // 2: flag errors
    assert_eq!(run(&["fit", "--bogus", "1"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["fit", "--k"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "estimate", "--side", "sideways", "--kmin", "0", "--kmax", "1", "--ktol", "1e-3",
            "--in", "-"
        ])
        .status
        .code(),
        Some(2)
    );
    // 1: I/O
    assert_eq!(
        run(&["validate", "--in", "/nonexistent/nowhere.csv"])
            .status
            .code(),
        Some(1)
    );
    // 4: domain guard (value touching zero)
    let path = tmp_path("zero.csv");
    std::fs::write(&path, "t,g\n0,0\n0.5,0.5\n1,1\n").unwrap();
    assert_eq!(
        run(&["check", "--k", "0", "--in", path.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
    // 5: bracket failure (both endpoints on the same side)
    let flat = tmp_path("flat.csv");
    let mut csv = String::from("t,g\n");
    for i in 0..=200 {
        csv.push_str(&format!("{},1\n", i as f64 / 200.0));
    }
    std::fs::write(&flat, csv).unwrap();
    assert_eq!(
        run(&[
            "estimate",
            "--side",
            "upper",
            "--kmin",
            "3",
            "--kmax",
            "4",
            "--ktol",
            "1e-3",
            "--in",
            flat.to_str().unwrap(),
        ])
        .status
        .code(),
        Some(5)
    );
    std::fs::remove_file(&path).ok();
    std::fs::remove_file(&flat).ok();
}

#[test]
fn audit_reports_are_seed_reproducible() {
    let path = tmp_path("audit.csv");
    let out = run(&[
        "synth",
        "--k",
        "0",
        "--u",
        "0.36",
        "--v",
        "0.48",
        "--from",
        "0",
        "--to",
        "1",
        "--n",
        "301",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let a = run(&[
        "audit",
        "--k",
        "0",
        "--in",
        path.to_str().unwrap(),
        "--pairs",
        "40",
        "--seed",
        "9",
    ]);
    let b = run(&[
        "audit",
        "--k",
        "0",
        "--in",
        path.to_str().unwrap(),
        "--pairs",
        "40",
        "--seed",
        "9",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let json = stdout_str(&a);
    assert!(json.contains("\"chords_tested\":40"));
    assert!(json.contains("\"kind\":\"equality\""));
    std::fs::remove_file(&path).ok();
}

#[test]
fn resample_admits_nonuniform_grids() {
    let path = tmp_path("nonuniform.csv");
    // nonuniform grid sampling the flat comparison function through the
    // default figure endpoints
    let mut csv = String::from("t,g\n");
    let mut t = 0.0f64;
    let mut step = 0.004;
    while t <= 1.0 {
        let g = ((0.36 - t) * (0.36 - t) + 0.48 * 0.48).sqrt();
        csv.push_str(&format!("{t},{g}\n"));
        t += step;
        step = if step > 0.007 { 0.004 } else { step + 0.001 };
    }
    std::fs::write(&path, csv).unwrap();
    let rejected = run(&["check", "--k", "0", "--in", path.to_str().unwrap()]);
    assert_eq!(
        rejected.status.code(),
        Some(4),
        "nonuniform grid is a domain error"
    );
    // the linear interpolant only supports stencils with steps well above
    // the input spacing, so regrid coarsely
    let resampled = run(&[
        "check",
        "--k",
        "0",
        "--in",
        path.to_str().unwrap(),
        "--resample",
        "21",
    ]);
    assert!(resampled.status.success());
    let json = stdout_str(&resampled);
    assert!(json.contains("\"kind\":\"equality\""), "{json}");
    std::fs::remove_file(&path).ok();
}
