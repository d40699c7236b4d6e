//! Matrix models of elementary Chevalley groups: SL_{ℓ+1} for A_ℓ and Sp₄ for C₂.
//!
//! Root elements are e_α(t) = 1 + tX_α with X_α² = 0. For C₂ the symplectic
//! form is J = [[0, I₂], [-I₂, 0]] and the negative root vectors are the
//! transposes of the positive ones.

mod constants;
mod filtration;

pub use constants::{
    formal_trunc_pair, golden_text, infer_structure_constants, infer_structure_constants_over,
    infer_structure_constants_trunc, verify_commutator, CommutatorReport, StructureConstants, Term,
};
pub use filtration::{
    congruence_dimensions, graded_piece, levi_decompose, perfectness_witness, LeviParts, PerfectnessWitness,
};

use std::fmt;

use thiserror::Error;

use crate::kernel::{KernelError, Matrix, Ring};
use crate::rings::RingError;
use crate::rootsys::{enumerate_roots, Root, RootError, RootKind, RootSystem};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChevalleyError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("commutator of e_alpha and e_-alpha is excluded")]
    OppositeRoots,
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),
    #[error("element is not congruent to the identity modulo e^{0}")]
    Level(usize),
    #[error("level {level} outside 1..{order}")]
    LevelRange { level: usize, order: usize },
    #[error("s = {0} must satisfy s != 0 and s^2 != 1")]
    BadScalar(i64),
    #[error("malformed structure constant line {line}: {msg}")]
    Golden { line: usize, msg: String },
}

/// Sparse integer matrix entry (row, col, value).
type Entry = (usize, usize, i64);

#[derive(Clone, Debug)]
pub struct ChevalleyModel {
    system: RootSystem,
    n: usize,
    generators: Vec<(Root, Vec<Entry>)>,
}

impl ChevalleyModel {
    pub fn new(kind: RootKind) -> Result<Self, ChevalleyError> {
        let system = enumerate_roots(kind)?;
        let (n, positive): (usize, Vec<(Root, Vec<Entry>)>) = match kind {
            RootKind::A(l) => {
                let n = l + 1;
                let mut gens = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let mut c = vec![0; n];
                        c[i] = 1;
                        c[j] = -1;
                        gens.push((Root(c), vec![(i, j, 1)]));
                    }
                }
                (n, gens)
            }
            RootKind::C2 => (
                4,
                vec![
                    (Root(vec![1, -1]), vec![(0, 1, 1), (3, 2, -1)]),
                    (Root(vec![1, 1]), vec![(0, 3, 1), (1, 2, 1)]),
                    (Root(vec![2, 0]), vec![(0, 2, 1)]),
                    (Root(vec![0, 2]), vec![(1, 3, 1)]),
                ],
            ),
        };
        let mut generators = Vec::with_capacity(2 * positive.len());
        for (r, entries) in positive {
            let transposed = entries.iter().map(|&(i, j, v)| (j, i, v)).collect();
            generators.push((r.neg(), transposed));
            generators.push((r, entries));
        }
        generators.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(ChevalleyModel { system, n, generators })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn kind(&self) -> RootKind {
        self.system.kind()
    }

    /// Matrix size.
    pub fn size(&self) -> usize {
        self.n
    }

    fn entries(&self, alpha: &Root) -> Result<&[Entry], ChevalleyError> {
        self.generators
            .binary_search_by(|(r, _)| r.cmp(alpha))
            .map(|k| self.generators[k].1.as_slice())
            .map_err(|_| RootError::NotARoot(alpha.to_string(), self.kind().to_string()).into())
    }

    /// X_α with entries in the domain of `like`.
    pub fn root_vector<R: Ring>(&self, alpha: &Root, like: &R) -> Result<Matrix<R>, ChevalleyError> {
        let mut m = Matrix::zeros(self.n, self.n, like);
        for &(i, j, v) in self.entries(alpha)? {
            m.set(i, j, like.from_int_like(v));
        }
        Ok(m)
    }

    /// e_α(t) = 1 + tX_α, with inverse e_α(-t).
    pub fn e<R: Ring>(&self, alpha: &Root, t: &R) -> Result<GroupElement<R>, ChevalleyError> {
        let entries = self.entries(alpha)?;
        let mut mat = Matrix::identity(self.n, t);
        let mut inv = Matrix::identity(self.n, t);
        let minus_t = t.neg();
        for &(i, j, v) in entries {
            mat.set(i, j, t.mul(&t.from_int_like(v)));
            inv.set(i, j, minus_t.mul(&t.from_int_like(v)));
        }
        Ok(GroupElement { mat, inv })
    }

    /// w_α(u) = e_α(u) e_{-α}(-u⁻¹) e_α(u).
    pub fn w<R: Ring>(&self, alpha: &Root, u: &R) -> Result<GroupElement<R>, ChevalleyError> {
        let u_inv = u.try_inv().ok_or_else(|| ChevalleyError::NotAUnit(u.to_string()))?;
        let a = self.e(alpha, u)?;
        let b = self.e(&alpha.neg(), &u_inv.neg())?;
        Ok(a.mul(&b).mul(&a))
    }

    /// h_α(u) = w_α(u) w_α(-1).
    pub fn h<R: Ring>(&self, alpha: &Root, u: &R) -> Result<GroupElement<R>, ChevalleyError> {
        let minus_one = u.one_like().neg();
        Ok(self.w(alpha, u)?.mul(&self.w(alpha, &minus_one)?))
    }

    pub fn identity<R: Ring>(&self, like: &R) -> GroupElement<R> {
        GroupElement::identity(self.n, like)
    }

    /// The standard symplectic form (C₂ only).
    pub fn symplectic_form<R: Ring>(&self, like: &R) -> Matrix<R> {
        let h = self.n / 2;
        Matrix::from_fn(self.n, self.n, |i, j| {
            if j == i + h {
                like.one_like()
            } else if i == j + h {
                like.one_like().neg()
            } else {
                like.zero_like()
            }
        })
    }

    /// det = 1 for A_ℓ, gᵀJg = J for C₂.
    pub fn in_group<R: Ring>(&self, g: &Matrix<R>) -> Result<bool, ChevalleyError> {
        match self.kind() {
            RootKind::A(_) => Ok(g.det()?.is_one()),
            RootKind::C2 => {
                let j = self.symplectic_form(g.sample());
                Ok(g.transpose().matmul(&j)?.matmul(g)? == j)
            }
        }
    }

    /// Trace zero for A_ℓ, XᵀJ + JX = 0 for C₂.
    pub fn in_lie_algebra<R: Ring>(&self, x: &Matrix<R>) -> Result<bool, ChevalleyError> {
        match self.kind() {
            RootKind::A(_) => Ok(x.trace().is_zero()),
            RootKind::C2 => {
                let j = self.symplectic_form(x.sample());
                Ok(x.transpose().matmul(&j)?.try_add(&j.matmul(x)?)?.is_zero())
            }
        }
    }
}

/// A group element stored together with its inverse.
#[derive(Clone, PartialEq)]
pub struct GroupElement<R: Ring> {
    mat: Matrix<R>,
    inv: Matrix<R>,
}

impl<R: Ring> GroupElement<R> {
    pub fn identity(n: usize, like: &R) -> Self {
        let id = Matrix::identity(n, like);
        GroupElement { mat: id.clone(), inv: id }
    }

    /// Wrap a matrix, computing its inverse.
    pub fn from_matrix(mat: Matrix<R>) -> Result<Self, ChevalleyError> {
        let inv = mat.inverse()?;
        Ok(GroupElement { mat, inv })
    }

    /// Wrap a matrix with a known inverse; the pair is checked.
    pub fn with_inverse(mat: Matrix<R>, inv: Matrix<R>) -> Result<Self, ChevalleyError> {
        if !mat.matmul(&inv)?.is_identity() {
            return Err(ChevalleyError::ModelInconsistency("supplied inverse is wrong".into()));
        }
        Ok(GroupElement { mat, inv })
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &Matrix<R> {
        &self.inv
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GroupElement { mat: &self.mat * &rhs.mat, inv: &rhs.inv * &self.inv }
    }

    pub fn inverse(&self) -> Self {
        GroupElement { mat: self.inv.clone(), inv: self.mat.clone() }
    }

    /// [a, b] = a b a⁻¹ b⁻¹.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).mul(&self.inverse()).mul(&rhs.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> GroupElement<S> {
        GroupElement { mat: self.mat.map(&f), inv: self.inv.map(&f) }
    }
}

impl<R: Ring> fmt::Display for GroupElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mat)
    }
}

impl<R: Ring> fmt::Debug for GroupElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mat)
    }
}
