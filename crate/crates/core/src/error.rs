use thiserror::Error;

use crate::simplex::{LpStatus, SimplexError};

/// Violations of the decision-matrix assumptions and file-format errors.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatrixError {
    #[error("value of metric {metric} for DMU {dmu} must be strictly positive")]
    NonPositiveValue { metric: String, dmu: String },
    #[error("value of metric {metric} for DMU {dmu} must be finite")]
    NonFiniteValue { metric: String, dmu: String },
    #[error("ordinal metric {metric} for DMU {dmu} lies outside its Likert bounds")]
    OrdinalOutOfBounds { metric: String, dmu: String },
    #[error("ordinal metric {metric} for DMU {dmu} is not an integer Likert point")]
    OrdinalNotInteger { metric: String, dmu: String },
    #[error("Likert bounds of metric {metric} must satisfy 1 <= lower < upper")]
    InvalidLikertBounds { metric: String },
    #[error("duplicate name {0}")]
    DuplicateName(String),
    #[error("matrix has no {0}")]
    EmptyAxis(&'static str),
    #[error("metric {metric} has {found} values for {expected} DMUs")]
    ShapeMismatch { metric: String, found: usize, expected: usize },
    #[error("unknown DMU {0}")]
    UnknownDmu(String),
    #[error("line {line}: {reason}")]
    Parse { line: u64, reason: String },
    #[error("{0}")]
    Io(String),
}

/// Failures while running one of the assessment models.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AssessError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("solver failed for DMU {dmu}: {source}")]
    Solver {
        dmu: String,
        #[source]
        source: SimplexError,
    },
    #[error("program for DMU {dmu} ended {status:?}")]
    UnexpectedStatus { dmu: String, status: LpStatus },
    #[error("numerical breakdown for DMU {dmu}: {reason}")]
    NumericalBreakdown { dmu: String, reason: String },
    #[error("complementary slackness violated for DMU {dmu}: max |product| = {max_product:e}")]
    ScscViolation { dmu: String, max_product: f64 },
    #[error("top tier has a single member {0}; super-gap program is not defined")]
    SoleEfficient(String),
    #[error("DMU {0} is not in the top tier")]
    NotInTopTier(String),
}

impl AssessError {
    pub(crate) fn solver(dmu: &str, source: SimplexError) -> Self {
        AssessError::Solver { dmu: dmu.to_string(), source }
    }
}
