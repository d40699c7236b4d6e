//! Levi decomposition and the congruence filtration of G(K[ε]/(ε^d)).

use crate::kernel::{rank_of, Matrix, Rational, Ring};
use crate::rings::Trunc;
use crate::rootsys::Root;

use super::{ChevalleyError, ChevalleyModel, GroupElement};

/// g = g₀ · c with g₀ defined over the residue field and c ≡ 1 mod ε.
#[derive(Clone, Debug)]
pub struct LeviParts<R: Ring> {
    pub reductive: GroupElement<R>,
    pub congruence: GroupElement<Trunc<R>>,
}

impl<R: Ring> LeviParts<R> {
    pub fn recompose(&self) -> GroupElement<Trunc<R>> {
        let d = self.congruence.matrix().sample().order();
        embed(&self.reductive, d).mul(&self.congruence)
    }
}

fn embed<R: Ring>(g: &GroupElement<R>, d: usize) -> GroupElement<Trunc<R>> {
    g.map(|c| Trunc::constant(d, c.clone()))
}

pub fn levi_decompose<R: Ring>(g: &GroupElement<Trunc<R>>) -> LeviParts<R> {
    let d = g.matrix().sample().order();
    let reductive = g.map(|c| c.residue().clone());
    let congruence = embed(&reductive, d).inverse().mul(g);
    LeviParts { reductive, congruence }
}

/// For c = 1 + ε^s X + O(ε^{s+1}), return X mod ε.
pub fn graded_piece<R: Ring>(c: &GroupElement<Trunc<R>>, s: usize) -> Result<Matrix<R>, ChevalleyError> {
    let m = c.matrix();
    let d = m.sample().order();
    if s == 0 || s >= d {
        return Err(ChevalleyError::LevelRange { level: s, order: d });
    }
    let residue = m.map(|x| x.residue().clone());
    if !residue.is_identity() {
        return Err(ChevalleyError::Level(1));
    }
    for k in 1..s {
        if m.entries().iter().any(|x| !x.coeff(k).is_zero()) {
            return Err(ChevalleyError::Level(s));
        }
    }
    Ok(m.map(|x| x.coeff(s).clone()))
}

/// Dimension over Q of each graded piece G(ε^s)/G(ε^{s+1}), s = 1..d-1, of
/// the congruence subgroup of the model over Q[ε]/(ε^d), computed from the
/// pieces of e_α(ε^s) and h_α(1 + ε^s).
pub fn congruence_dimensions(model: &ChevalleyModel, d: usize) -> Result<Vec<usize>, ChevalleyError> {
    crate::rings::TruncAlgebra::new(d)?;
    let one = Rational::one();
    let mut dims = Vec::new();
    for s in 1..d {
        let eps_s = Trunc::epsilon(d, &one).pow(s as u32);
        let mut pieces = Vec::new();
        for r in model.system().roots() {
            pieces.push(graded_piece(&model.e(r, &eps_s)?, s)?);
        }
        let unit = eps_s.one_like().add(&eps_s);
        for r in model.system().simple_roots() {
            pieces.push(graded_piece(&model.h(r, &unit)?, s)?);
        }
        let vectors: Vec<Vec<Rational>> = pieces.iter().map(|x| x.entries().to_vec()).collect();
        dims.push(rank_of(&vectors)?);
    }
    Ok(dims)
}

/// e_α(r) written as the commutator [h_α(s), e_α(r / (s² - 1))].
#[derive(Clone, Debug)]
pub struct PerfectnessWitness<R: Ring> {
    pub alpha: Root,
    pub h: GroupElement<R>,
    pub argument: R,
    pub holds: bool,
}

pub fn perfectness_witness<R: Ring>(
    model: &ChevalleyModel,
    r: &R,
    s: i64,
) -> Result<Vec<PerfectnessWitness<R>>, ChevalleyError> {
    if s == 0 || s * s == 1 {
        return Err(ChevalleyError::BadScalar(s));
    }
    let scale = Rational::frac(1, s * s - 1);
    let s_elem = r.from_int_like(s);
    let target_arg = r.clone();
    let argument = r.scale(&scale);
    let mut out = Vec::new();
    for alpha in model.system().roots() {
        let h = model.h(alpha, &s_elem)?;
        let comm = h.commutator(&model.e(alpha, &argument)?);
        let holds = comm == model.e(alpha, &target_arg)?;
        out.push(PerfectnessWitness { alpha: alpha.clone(), h, argument: argument.clone(), holds });
    }
    Ok(out)
}
