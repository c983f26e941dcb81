//! The eight subcommands. Flag parse errors exit 2; value semantics are
//! delegated to the library, whose error classes map to exit 3
//! (infeasible), 4 (domain/parameters/grid) and 5 (bracket).

use curvcmp_core::{
    classify, default_tolerance, equivalence_audit, estimate_threshold, eval_g, fit,
    is_distance_like, pairwise_oracle, residual_series, witness_monotone, witness_series,
    ChordSpec, ComparisonParams, Curvature, SampledFunction, ThresholdSide,
};

use crate::args::{CliError, Flags};
use crate::csvio::{read_input, write_columns, write_output, write_sample};
use crate::report;
use crate::svg::{render_figure, FigureCurve};

/// Figure-scale curvature list: 6,…,1,0,−1,…,−6,−100,−4000.
const FIGURE_KS: [f64; 15] = [
    6.0, 5.0, 4.0, 3.0, 2.0, 1.0, 0.0, -1.0, -2.0, -3.0, -4.0, -5.0, -6.0, -100.0, -4000.0,
];

/// Node cap keeping the pairwise oracle at or below 1e5 pairs.
const PAIRWISE_MAX_NODES: usize = 447;

fn curvature(flags: &Flags) -> Result<Curvature, CliError> {
    Ok(Curvature::new(flags.require_f64("k")?)?)
}

fn params_from_flags(flags: &Flags) -> Result<ComparisonParams, CliError> {
    let k = curvature(flags)?;
    Ok(ComparisonParams::new(
        k,
        flags.require_f64("u")?,
        flags.require_f64("v")?,
    )?)
}

pub fn cmd_fit(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["k", "t1", "t2", "g1", "g2", "out"], &[])?;
    let spec = ChordSpec::new(
        curvature(&flags)?,
        flags.require_f64("t1")?,
        flags.require_f64("t2")?,
        flags.require_f64("g1")?,
        flags.require_f64("g2")?,
    )?;
    let fitted = fit(&spec)?;
    let json = report::fit_json(
        spec.curvature().value(),
        fitted.params.u(),
        fitted.params.v(),
        fitted.residual_t1,
        fitted.residual_t2,
    );
    write_output(flags.get("out"), &json)
}

fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i == n - 1 {
                b
            } else {
                a + (b - a) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

pub fn cmd_synth(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["k", "u", "v", "from", "to", "n", "out"], &[])?;
    let params = params_from_flags(&flags)?;
    let f = curvcmp_core::synth(
        params,
        flags.require_f64("from")?,
        flags.require_f64("to")?,
        flags.require_usize("n")?,
    )?;
    write_output(flags.get("out"), &write_sample(&f))
}

pub fn cmd_eval(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["k", "u", "v", "in", "from", "to", "n", "out"], &[])?;
    let params = params_from_flags(&flags)?;
    let ts: Vec<f64> = match flags.get("in") {
        Some(path) => {
            if flags.get("from").is_some() || flags.get("to").is_some() || flags.get("n").is_some()
            {
                return Err(CliError::flags("--in conflicts with --from/--to/--n"));
            }
            read_input(path)?.ts().to_vec()
        }
        None => {
            let a = flags.require_f64("from")?;
            let b = flags.require_f64("to")?;
            let n = flags.require_usize("n")?;
            if n < 2 || a >= b {
                return Err(CliError::flags("need --from < --to and --n >= 2"));
            }
            uniform_grid(a, b, n)
        }
    };
    let mut gs = Vec::with_capacity(ts.len());
    for &t in &ts {
        gs.push(eval_g(params, t)?);
    }
    let f = SampledFunction::new(ts, gs)?;
    write_output(flags.get("out"), &write_sample(&f))
}

pub fn cmd_validate(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["in", "tol", "out"], &["pairwise"])?;
    let f = read_input(flags.require("in")?)?;
    let tol = flags.opt_f64("tol")?.unwrap_or(1e-9);
    let shortcut = is_distance_like(&f, tol);
    let pairwise = if flags.has("pairwise") {
        let (sub, index_map) = subsample_for_pairwise(&f)?;
        let oracle = pairwise_oracle(&sub, tol);
        let first = oracle
            .first_violation
            .map(|(i, j)| (index_map[i], index_map[j]));
        Some((oracle.ok, sub.len(), first))
    } else {
        None
    };
    write_output(
        flags.get("out"),
        &report::validate_json(&shortcut, pairwise),
    )
}

/// Rereads the sample on a uniform `n`-node grid over its span, using the
/// piecewise-linear interpretation of the data. Lets nonuniform grids
/// reach the stencil-based commands explicitly (`--resample N`).
fn resample(f: &SampledFunction, n: usize) -> Result<SampledFunction, CliError> {
    if n < 3 {
        return Err(CliError::flags("--resample needs at least 3 nodes"));
    }
    let (ts, gs) = (f.ts(), f.gs());
    let grid = uniform_grid(f.a(), f.b(), n);
    let values: Vec<f64> = grid
        .iter()
        .map(|&t| {
            let hi = ts.partition_point(|&x| x < t).clamp(1, ts.len() - 1);
            let lo = hi - 1;
            let w = (t - ts[lo]) / (ts[hi] - ts[lo]);
            gs[lo] + w.clamp(0.0, 1.0) * (gs[hi] - gs[lo])
        })
        .collect();
    Ok(SampledFunction::new(grid, values)?)
}

/// Reads `--in` and applies `--resample` when present.
fn read_grid_input(flags: &Flags) -> Result<SampledFunction, CliError> {
    let f = read_input(flags.require("in")?)?;
    match flags.opt_usize("resample")? {
        Some(n) => resample(&f, n),
        None => Ok(f),
    }
}

/// Evenly strided node subset (endpoints kept) capping the oracle cost;
/// returns the subsample and its original indices.
fn subsample_for_pairwise(f: &SampledFunction) -> Result<(SampledFunction, Vec<usize>), CliError> {
    let n = f.len();
    if n <= PAIRWISE_MAX_NODES {
        return Ok((f.clone(), (0..n).collect()));
    }
    let m = PAIRWISE_MAX_NODES;
    let mut indices: Vec<usize> = (0..m)
        .map(|i| (i as f64 * (n - 1) as f64 / (m - 1) as f64).round() as usize)
        .collect();
    indices.dedup();
    let ts: Vec<f64> = indices.iter().map(|&i| f.ts()[i]).collect();
    let gs: Vec<f64> = indices.iter().map(|&i| f.gs()[i]).collect();
    Ok((SampledFunction::new(ts, gs)?, indices))
}

pub fn cmd_check(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["k", "in", "tol", "resample", "out"], &[])?;
    let k = curvature(&flags)?;
    let f = read_grid_input(&flags)?;
    let tol = match flags.opt_f64("tol")? {
        Some(t) => t,
        None => default_tolerance(&f)?,
    };
    let rs = residual_series(&f, k, 0.0)?;
    let verdict = classify(&rs, tol);
    let ws = witness_series(&f, k)?;
    let h = rs.stencil.step;
    let scale = ws.ws.iter().fold(0.0f64, |m, w| m.max(w.abs()));
    // one-sided endpoint stencils leave O(h^2) steps in the witness
    let wtol = 20.0 * h * h * (1.0 + scale);
    let monotone = witness_monotone(&ws, wtol);
    write_output(
        flags.get("out"),
        &report::check_json(&verdict, ws.kind, monotone, wtol),
    )
}

pub fn cmd_audit(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(
        args,
        &["k", "in", "pairs", "seed", "tol", "resample", "out"],
        &[],
    )?;
    let k = curvature(&flags)?;
    let f = read_grid_input(&flags)?;
    let pairs = flags.require_usize("pairs")?;
    let seed = flags.require_u64("seed")?;
    let tol = match flags.opt_f64("tol")? {
        Some(t) => t,
        None => default_tolerance(&f)?,
    };
    let report = equivalence_audit(&f, k, pairs, seed, tol)?;
    write_output(flags.get("out"), &report::audit_json(&report))
}

pub fn cmd_estimate(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(
        args,
        &["side", "kmin", "kmax", "ktol", "in", "resample", "out"],
        &[],
    )?;
    let side = match flags.require("side")? {
        "upper" => ThresholdSide::Upper,
        "lower" => ThresholdSide::Lower,
        other => {
            return Err(CliError::flags(format!(
                "--side must be 'upper' or 'lower', got '{other}'"
            )))
        }
    };
    let f = read_grid_input(&flags)?;
    let result = estimate_threshold(
        &f,
        side,
        flags.require_f64("kmin")?,
        flags.require_f64("kmax")?,
        flags.require_f64("ktol")?,
    )?;
    write_output(flags.get("out"), &report::estimate_json(&result))
}

pub fn cmd_figure(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(
        args,
        &["out", "csv", "ks", "t1", "t2", "g1", "g2", "n"],
        &[],
    )?;
    let out = flags.require("out")?;
    let csv_path = match flags.get("csv") {
        Some(p) => p.to_string(),
        None => match out.strip_suffix(".svg") {
            Some(stem) => format!("{stem}.csv"),
            None => format!("{out}.csv"),
        },
    };
    let t1 = flags.opt_f64("t1")?.unwrap_or(0.0);
    let t2 = flags.opt_f64("t2")?.unwrap_or(1.0);
    let g1 = flags.opt_f64("g1")?.unwrap_or(0.6);
    let g2 = flags.opt_f64("g2")?.unwrap_or(0.8);
    let n = flags.opt_usize("n")?.unwrap_or(1001);
    if n < 2 || t1 >= t2 {
        return Err(CliError::flags("need --t1 < --t2 and --n >= 2"));
    }
    let ks: Vec<f64> = match flags.get("ks") {
        Some(list) => {
            let mut ks = Vec::new();
            for item in list.split(',') {
                let k: f64 = item.trim().parse().map_err(|_| {
                    CliError::flags(format!("--ks entry '{}' is not a number", item.trim()))
                })?;
                if !k.is_finite() {
                    return Err(CliError::flags("--ks entries must be finite"));
                }
                ks.push(k);
            }
            if ks.is_empty() {
                return Err(CliError::flags("--ks must list at least one curvature"));
            }
            ks
        }
        None => FIGURE_KS.to_vec(),
    };

    let grid = uniform_grid(t1, t2, n);
    let mut curves = Vec::new();
    for &k in &ks {
        let fitted = Curvature::new(k)
            .and_then(|k| ChordSpec::new(k, t1, t2, g1, g2))
            .and_then(|spec| fit(&spec));
        let params = match fitted {
            Ok(f) => f.params,
            Err(e) => {
                eprintln!("warning: k={k}: {e}; curve skipped");
                continue;
            }
        };
        let mut gs = Vec::with_capacity(n);
        for &t in &grid {
            gs.push(eval_g(params, t)?);
        }
        curves.push(FigureCurve {
            k,
            ts: grid.clone(),
            gs,
        });
    }

    let mut header = vec!["t".to_string()];
    let mut columns = vec![grid.clone()];
    for c in &curves {
        header.push(format!("g_{}", c.k));
        columns.push(c.gs.clone());
    }
    std::fs::write(&csv_path, write_columns(&header, &columns))
        .map_err(|e| CliError::io(format!("writing {csv_path}: {e}")))?;

    let svg = render_figure(t1, t2, &curves);
    std::fs::write(out, svg).map_err(|e| CliError::io(format!("writing {out}: {e}")))?;
    Ok(())
}
