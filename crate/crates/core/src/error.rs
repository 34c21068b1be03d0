use thiserror::Error;

use crate::model::Diagnostic;

/// Violations of the arithmetic domain (non-positive inputs, division by zero, bad literals).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("coefficient must be positive, got {0}")]
    NonPositiveCoefficient(String),
    #[error("radicand must be a positive integer")]
    NonPositiveRadicand,
    #[error("root index must be at least 1")]
    ZeroIndex,
    #[error("division by zero")]
    ZeroDivision,
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("parameter a must be positive, got {0}")]
    NonPositiveParameter(String),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Reasons `evaluate` refuses to run.
#[derive(Debug, Clone, Error)]
pub enum EvalError {
    #[error("instance failed validation ({} diagnostic(s))", .0.len())]
    Invalid(Vec<Diagnostic>),
}
