//! Error type shared by all modules.

use core::fmt;

/// Errors produced by evaluation, fitting and checking routines.
///
/// Every variant carries a static message naming the violated condition;
/// the variant itself tells callers which class of failure occurred
/// (front ends map `Infeasible` and `Bracket` to their own exit codes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A parameter or type invariant is violated.
    InvalidParams(&'static str),
    /// An input lies outside the mathematical domain of an evaluation.
    Domain(&'static str),
    /// A dividing factor vanishes at the evaluation point.
    Singularity(&'static str),
    /// The requested chord or triangle is not realizable in the model space.
    Infeasible(&'static str),
    /// The sample grid is malformed (ordering, spacing or size).
    Grid(&'static str),
    /// Bisection endpoints do not bracket a classification change.
    Bracket(&'static str),
}

impl Error {
    /// The message attached to the error.
    pub fn message(&self) -> &'static str {
        match self {
            Error::InvalidParams(m)
            | Error::Domain(m)
            | Error::Singularity(m)
            | Error::Infeasible(m)
            | Error::Grid(m)
            | Error::Bracket(m) => m,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams(m) => write!(f, "invalid parameters: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Singularity(m) => write!(f, "singularity: {m}"),
            Error::Infeasible(m) => write!(f, "infeasible: {m}"),
            Error::Grid(m) => write!(f, "grid error: {m}"),
            Error::Bracket(m) => write!(f, "bracket error: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
