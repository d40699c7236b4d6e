//! Central extensions given by cocycles, the non-split extension of
//! 𝔤 ⊕ 𝔤 by the Killing form, and decomposition of finite-dimensional
//! commutative algebras into local factors.

mod algebra;
mod groups;
mod heisenberg;
mod splitting;

pub use algebra::{decompose_algebra, Decomposition, FactorKind, FinDimAlgebra, LocalFactor};
pub use groups::{
    commutator_identity_holds, group_axioms_hold, unitriangular, unitriangular_extension, AdditiveMatrices, Cocycle,
    CocycleExtension, ExtElem, Group, MatrixGroup, ProductGroup,
};
pub use heisenberg::{
    heisenberg_commutator, killing_form, sl_basis, splitness_verdict, BilinearForm, HeisenbergElem,
    HeisenbergLikeGroup, PairBase, SplitnessVerdict,
};
pub use splitting::{commutator_lift_invariance, product_splitting, LiftReport, Obstruction, SplittingReport};

use thiserror::Error;

use crate::kernel::KernelError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExtensionError {
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    Shape { expected: usize, rows: usize, cols: usize },
    #[error("{0} does not have trace zero")]
    NotTraceZero(String),
    #[error("a lift does not project to the given base element")]
    BadLift,
    #[error("not a section: {0}")]
    NotASection(String),
    #[error("multiplication is not {0}")]
    BadAlgebra(String),
    #[error("residue field larger than Q: {0}")]
    ResidueField(String),
    #[error("idempotent lifting failed: {0}")]
    IdempotentLifting(String),
    #[error("algebra file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
