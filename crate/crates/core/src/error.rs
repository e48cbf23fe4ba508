use thiserror::Error;

use crate::category::Violation;
use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {dim} exceeds the limit {limit} for this method")]
    TooLarge { dim: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at 0: no power series expansion")]
    PoleAtZero,
    #[error("expected a function of {expected}, found one of {found}")]
    VariableMismatch { expected: Var, found: Var },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("invalid category: {}", render_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("diagonal entry {value} at index {index} is below 2")]
    DiagonalTooSmall { index: usize, value: u64 },
    #[error("not transitive: Z[{i}][{j}] and Z[{j}][{k}] are positive but Z[{i}][{k}] is 0")]
    NotTransitive { i: usize, j: usize, k: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
}

fn render_violations(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
