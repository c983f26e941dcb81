//! CSV input and output.
//!
//! Samples are written as a `t,g` header plus one row per node; floats
//! carry 17 significant digits so a written file re-parses bit-exactly.
//! LF line endings, no comments.

use std::fs;
use std::io::Read;

use curvcmp_core::SampledFunction;

use crate::args::CliError;

/// 17 significant digits: lossless for f64 and deterministic.
pub fn fmt17(x: f64) -> String {
    format!("{:.16e}", x)
}

pub fn write_sample(f: &SampledFunction) -> String {
    let mut out = String::from("t,g\n");
    for (t, g) in f.ts().iter().zip(f.gs()) {
        out.push_str(&fmt17(*t));
        out.push(',');
        out.push_str(&fmt17(*g));
        out.push('\n');
    }
    out
}

/// Multi-column variant used by the figure companion file.
pub fn write_columns(header: &[String], columns: &[Vec<f64>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    let rows = columns.first().map_or(0, |c| c.len());
    for row in 0..rows {
        for (i, col) in columns.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&fmt17(col[row]));
        }
        out.push('\n');
    }
    out
}

pub fn parse_sample(text: &str) -> Result<SampledFunction, CliError> {
    let mut ts = Vec::new();
    let mut gs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let (a, b) = (fields.next(), fields.next());
        if fields.next().is_some() {
            return Err(CliError::io(format!(
                "line {}: expected two columns",
                lineno + 1
            )));
        }
        let (a, b) = match (a, b) {
            (Some(a), Some(b)) => (a.trim(), b.trim()),
            _ => {
                return Err(CliError::io(format!(
                    "line {}: expected two columns",
                    lineno + 1
                )))
            }
        };
        match (a.parse::<f64>(), b.parse::<f64>()) {
            (Ok(t), Ok(g)) => {
                ts.push(t);
                gs.push(g);
            }
            _ if lineno == 0 => continue, // header
            _ => {
                return Err(CliError::io(format!(
                    "line {}: cannot parse '{line}'",
                    lineno + 1
                )))
            }
        }
    }
    SampledFunction::new(ts, gs).map_err(CliError::from)
}

/// Reads the `--in` argument: a path, or standard input for `-`.
pub fn read_input(path: &str) -> Result<SampledFunction, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::io(format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| CliError::io(format!("reading {path}: {e}")))?
    };
    parse_sample(&text)
}

/// Writes to `--out` when given, standard output otherwise.
pub fn write_output(out: Option<&str>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, content).map_err(|e| CliError::io(format!("writing {path}: {e}")))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
