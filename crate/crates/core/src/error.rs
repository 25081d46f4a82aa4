use std::fmt;

use thiserror::Error;

use crate::inference::OutputInterval;

/// Pair of rules whose positive output intervals do not meet at some input.
///
/// `high` is the rule with the largest left endpoint, `low` the rule with the
/// smallest right endpoint, so `high_interval.lo > low_interval.hi`.
/// Indices are zero-based.
#[derive(Debug, Clone, PartialEq)]
pub struct IncoherenceWitness {
    pub high: usize,
    pub low: usize,
    pub high_interval: OutputInterval,
    pub low_interval: OutputInterval,
}

impl IncoherenceWitness {
    /// The witness as an unordered pair `(min, max)` of rule indices.
    pub fn pair(&self) -> (usize, usize) {
        (self.high.min(self.low), self.high.max(self.low))
    }

    /// How far apart the two intervals are (`L(high) - R(low)`, positive).
    pub fn gap(&self) -> f64 {
        self.high_interval.lo - self.low_interval.hi
    }
}

impl fmt::Display for IncoherenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (j, k) = self.pair();
        write!(
            f,
            "rules {},{}: I_{} = {} lies above I_{} = {}",
            j + 1,
            k + 1,
            self.high + 1,
            self.high_interval,
            self.low + 1,
            self.low_interval
        )
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("empty conjunction")]
    EmptyConjunction,

    #[error("empty disjunction")]
    EmptyDisjunction,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not Archimedean: the {0} t-norm has no additive generator")]
    NotArchimedean(String),

    #[error("radial property violated: {0}")]
    RadialPropertyViolated(String),

    #[error("no rule fires (incomplete rule base at x = {x:?})")]
    NoRuleFires { x: Vec<f64> },

    #[error("incoherent at x = {x:?}: {witness}")]
    Incoherent {
        x: Vec<f64>,
        witness: IncoherenceWitness,
    },

    #[error("{operation} applies to {expected} systems")]
    WrongRepresentation {
        operation: &'static str,
        expected: &'static str,
    },

    #[error("DOC requires a bounded input domain")]
    MissingInputBox,

    #[error("minimizer did not converge after {iterations} iterations (best value {best_value} at {best_x:?})")]
    NonConvergence {
        iterations: usize,
        best_value: f64,
        best_x: Vec<f64>,
    },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{field}: {message}")]
    Validation { field: String, message: String },
}

pub type Result<T, E = FuzzyError> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> FuzzyError {
    FuzzyError::InvalidParameter(msg.into())
}
