//! Flag parsing. Every command takes `--name value` flags (plus a few
//! boolean switches); unknown or malformed flags are rejected before any
//! computation runs.

use std::collections::BTreeMap;

use curvcmp_core::Error as CoreError;

/// Exit codes: 1 I/O, 2 flags, 3 infeasibility, 4 domain, 5 bracket.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn flags(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::Infeasible(_) => 3,
            CoreError::Bracket(_) => 5,
            CoreError::InvalidParams(_)
            | CoreError::Domain(_)
            | CoreError::Singularity(_)
            | CoreError::Grid(_) => 4,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

pub struct Flags {
    values: BTreeMap<String, String>,
    switches: Vec<String>,
}

impl Flags {
    /// Parses `args` against the allowed value flags and boolean switches.
    pub fn parse(
        args: &[String],
        value_flags: &[&str],
        bool_flags: &[&str],
    ) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        let mut switches = Vec::new();
        let mut it = args.iter();
        while let Some(token) = it.next() {
            let name = token
                .strip_prefix("--")
                .ok_or_else(|| CliError::flags(format!("unexpected argument '{token}'")))?;
            if bool_flags.contains(&name) {
                switches.push(name.to_string());
            } else if value_flags.contains(&name) {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::flags(format!("flag --{name} needs a value")))?;
                if values.insert(name.to_string(), value.clone()).is_some() {
                    return Err(CliError::flags(format!("flag --{name} given twice")));
                }
            } else {
                return Err(CliError::flags(format!("unknown flag --{name}")));
            }
        }
        Ok(Flags { values, switches })
    }

    pub fn has(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(|s| s.as_str())
    }

    pub fn require(&self, name: &str) -> Result<&str, CliError> {
        self.get(name)
            .ok_or_else(|| CliError::flags(format!("missing required flag --{name}")))
    }

    pub fn require_f64(&self, name: &str) -> Result<f64, CliError> {
        parse_f64(name, self.require(name)?)
    }

    pub fn opt_f64(&self, name: &str) -> Result<Option<f64>, CliError> {
        self.get(name).map(|v| parse_f64(name, v)).transpose()
    }

    pub fn require_usize(&self, name: &str) -> Result<usize, CliError> {
        self.require(name)?
            .parse()
            .map_err(|_| CliError::flags(format!("flag --{name} must be a non-negative integer")))
    }

    pub fn opt_usize(&self, name: &str) -> Result<Option<usize>, CliError> {
        self.get(name)
            .map(|v| {
                v.parse().map_err(|_| {
                    CliError::flags(format!("flag --{name} must be a non-negative integer"))
                })
            })
            .transpose()
    }

    pub fn require_u64(&self, name: &str) -> Result<u64, CliError> {
        self.require(name)?
            .parse()
            .map_err(|_| CliError::flags(format!("flag --{name} must be a non-negative integer")))
    }
}

fn parse_f64(name: &str, value: &str) -> Result<f64, CliError> {
    let x: f64 = value
        .parse()
        .map_err(|_| CliError::flags(format!("flag --{name} must be a number, got '{value}'")))?;
    if !x.is_finite() {
        return Err(CliError::flags(format!("flag --{name} must be finite")));
    }
    Ok(x)
}
