use thiserror::Error;

use crate::poly::Degree;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,

    #[error("discriminant needs degree >= 1, got {degree}")]
    DegreeTooLow { degree: Degree },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("degree dropped at index {n}: expected {expected}, generated {actual}")]
    DegreeDropped {
        n: usize,
        expected: usize,
        actual: Degree,
    },

    #[error("condition violated: {0}")]
    ConditionViolated(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error(
        "degenerate quotient polynomial at index {n}: expected x-degree {expected}, got {actual}"
    )]
    DegenerateB {
        n: usize,
        expected: usize,
        actual: Degree,
    },

    #[error("lower parameter pole: ({lower})_{k} vanishes before the series terminates")]
    LowerPole { lower: String, k: usize },

    #[error("series does not terminate: no upper parameter is a nonpositive integer")]
    NonTerminating,

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("exponent {0} is too large to evaluate")]
    ExponentOverflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}
