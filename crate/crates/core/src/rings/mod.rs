//! Truncated polynomial algebras, their direct sums, and the unit-group
//! identities used to show that elements 1 - ux generate the units.

mod sum;
mod trunc;
mod units;

pub use sum::{PolySource, RingHom, SumAlgebra, SumElement};
pub use trunc::{trunc_add, trunc_inv, trunc_mul, Trunc, TruncAlgebra, TruncElement};
pub use units::{
    elementary_symmetric, factor_one_minus_ux, unit_group_witness, verify_unit_witness, OneMinusUx, UnitWitness,
    WitnessCheck,
};

use thiserror::Error;

use crate::kernel::KernelError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RingError {
    #[error("truncation order must be at least 1")]
    InvalidOrder,
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("{got} coefficients do not fit in K[e]/(e^{d})")]
    TooManyCoefficients { d: usize, got: usize },
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("{0} has zero linear coefficient")]
    LinearCoefficientZero(String),
    #[error("{0} is not congruent to 1 mod e")]
    NotPrincipalUnit(String),
    #[error("1 - u*x0 vanishes for u = {0}")]
    DegenerateScalar(String),
    #[error("a direct sum needs at least one factor")]
    EmptySum,
    #[error("expected {expected} components, got {got}")]
    FactorCount { expected: usize, got: usize },
    #[error("relation {0} does not have integer coefficients")]
    NonIntegralRelation(String),
    #[error("relation {relation} maps to {value}, not 0")]
    RelationNotRespected { relation: String, value: String },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
