//! Exact arithmetic foundation: rationals, number fields, multivariate
//! polynomials and dense matrices.

mod matrix;
mod numfield;
mod poly;
mod rational;
mod ring;

pub use matrix::{rank_of, rref, Matrix, Rref};
pub use numfield::{NumberField, NumberFieldElement};
pub use poly::{Assignment, Monomial, MultiPoly};
pub use rational::Rational;
pub use ring::{Field, Ring};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KernelError {
    #[error("entries come from different coefficient domains")]
    DomainMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("matrix has no rows or no columns")]
    EmptyMatrix,
    #[error("singular matrix (determinant {determinant})")]
    Singular { determinant: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable {0} is not assigned")]
    UnassignedVariable(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinpoly(String),
    #[error("parse error: {0}")]
    Parse(String),
}
