//! Command-line front end: evaluate and fit model-space comparison
//! functions, validate distance-likeness of sampled data, classify the
//! comparison differential inequalities, audit the chordal equivalence,
//! bracket critical curvatures, and render the curvature-scale figure.

mod args;
mod commands;
mod csvio;
mod report;
mod svg;

use args::CliError;

const USAGE: &str = "\
usage: curvcmp <command> [flags]

commands:
  fit       --k K --t1 T1 --t2 T2 --g1 G1 --g2 G2 [--out F]
            solve for the comparison function through (T1,G1), (T2,G2); JSON
  eval      --k K --u U --v V (--in CSV | --from A --to B --n N) [--out F]
            evaluate g_k on a grid; CSV t,g
  synth     --k K --u U --v V --from A --to B --n N [--out F]
            sample g_k on a uniform grid; CSV t,g
  validate  --in CSV [--tol T] [--pairwise] [--out F]
            distance-like check (endpoint shortcut; optional all-pairs oracle)
  check     --k K --in CSV [--tol T] [--resample N] [--out F]
            classify g'' - (1-g'^2)ct_k(g) on the sample; JSON verdict
  audit     --k K --in CSV --pairs N --seed S [--tol T] [--resample N]
            [--out F]
            compare seeded chords against the verdict; JSON report
  estimate  --side upper|lower --kmin A --kmax B --ktol T --in CSV
            [--resample N] [--out F]
            bisect for the critical curvature; JSON bracket
  figure    --out F.svg [--csv F.csv] [--ks LIST] [--t1 A --t2 B]
            [--g1 G1 --g2 G2] [--n N]
            curvature-scale SVG plus companion CSV (defaults: [0,1],
            endpoints 0.6/0.8, 1001 nodes, k = 6..-6,-100,-4000)

CSV input is `t,g` per row (header optional); `--in -` reads stdin.
Stencil commands need uniform grids; `--resample N` regrids nonuniform
input onto N uniform nodes by linear interpolation.
exit codes: 0 ok, 1 I/O, 2 flags, 3 infeasible, 4 domain, 5 bracket.
";

fn run(args: &[String]) -> Result<(), CliError> {
    let command = args
        .first()
        .ok_or_else(|| CliError::flags(format!("missing command\n{USAGE}")))?;
    let rest = &args[1..];
    match command.as_str() {
        "fit" => commands::cmd_fit(rest),
        "eval" => commands::cmd_eval(rest),
        "synth" => commands::cmd_synth(rest),
        "validate" => commands::cmd_validate(rest),
        "check" => commands::cmd_check(rest),
        "audit" => commands::cmd_audit(rest),
        "estimate" => commands::cmd_estimate(rest),
        "figure" => commands::cmd_figure(rest),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            Ok(())
        }
        other => Err(CliError::flags(format!(
            "unknown command '{other}'\n{USAGE}"
        ))),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let Err(e) = run(&args) {
        eprintln!("curvcmp: {}", e.message);
        std::process::exit(e.code);
    }
}
