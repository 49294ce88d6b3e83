use thiserror::Error;

use crate::ccomplex::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error(
        "matrix is not Hermitian: entry ({row}, {col}) deviates from the conjugate of its mirror by {deviation:e}"
    )]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("torus point has {found} coordinates but the system has {expected} colors")]
    ColorMismatch { expected: usize, found: usize },

    #[error("coordinate {index} has fraction {value}, which is not strictly between 0 and 1")]
    CoordinateOutOfRange { index: usize, value: String },

    #[error("invalid fraction {0:?}: expected p/q with integers p, q")]
    InvalidFraction(String),

    #[error("invalid sign pattern {0:?}")]
    InvalidPattern(String),

    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),

    #[error("invalid generalized Seifert system: {}", join_violations(.0))]
    InvalidSystem(Vec<Violation>),

    #[error("grid resolution must be at least 1, got {0}")]
    InvalidResolution(usize),

    #[error("a grid of resolution {resolution} in {mu} dimensions is too large")]
    GridTooLarge { resolution: usize, mu: usize },

    #[error("the system carries no linking numbers")]
    MissingLinking,

    #[error("sample list is empty")]
    EmptySamples,

    #[error("missing split/non-split flag for pair ({0}, {1}) whose linking number vanishes")]
    MissingNonsplitFlag(usize, usize),

    #[error(
        "sample {index} has nullity {eta}, but only samples with nullity equal to the beta estimate {beta} qualify"
    )]
    NonQualifyingSample { index: usize, eta: u32, beta: u32 },

    #[error("invalid Conway form {form:?}: {reason}")]
    InvalidConwayForm { form: String, reason: String },

    #[error("invalid fixture: {0}")]
    InvalidFixture(String),

    #[error("JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

fn join_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
