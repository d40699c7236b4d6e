//! Formal words in the generators x̃_α(t), their images under π_S, and
//! Steinberg symbols.

mod symbols;

pub use symbols::{
    check_symbol_relations, derived_symbol_identities, sample_triples, RelationOutcome, RelationReport, SymbolModel,
    SymbolRelation, TameSymbol,
};

use std::fmt;

use thiserror::Error;

use crate::chevalley::{ChevalleyError, ChevalleyModel, GroupElement};
use crate::kernel::Ring;
use crate::rootsys::Root;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SteinbergError {
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
}

/// x̃_α(t)^{±1}.
#[derive(Clone, Debug, PartialEq)]
pub struct Letter<R> {
    pub root: Root,
    pub t: R,
    pub exp: i8,
}

impl<R: Ring> Letter<R> {
    /// The argument with the exponent folded in: x̃_α(t)⁻¹ = x̃_α(-t).
    pub fn signed_arg(&self) -> R {
        if self.exp < 0 {
            self.t.neg()
        } else {
            self.t.clone()
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct SteinbergWord<R> {
    letters: Vec<Letter<R>>,
}

impl<R: Ring> Default for SteinbergWord<R> {
    fn default() -> Self {
        SteinbergWord { letters: Vec::new() }
    }
}

impl<R: Ring> SteinbergWord<R> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn letter(root: &Root, t: &R) -> Self {
        SteinbergWord { letters: vec![Letter { root: root.clone(), t: t.clone(), exp: 1 }] }
    }

    pub fn from_letters(letters: Vec<Letter<R>>) -> Self {
        SteinbergWord { letters }
    }

    pub fn letters(&self) -> &[Letter<R>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(rhs.letters.iter().cloned());
        SteinbergWord { letters }
    }

    /// The formal inverse: letters reversed with exponents flipped.
    pub fn inverse(&self) -> Self {
        let letters =
            self.letters.iter().rev().map(|l| Letter { root: l.root.clone(), t: l.t.clone(), exp: -l.exp }).collect();
        SteinbergWord { letters }
    }

    /// Cyclic rotation by `k` letters.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let n = letters.len();
            letters.rotate_left(k % n);
        }
        SteinbergWord { letters }
    }

    /// Merge adjacent letters with the same root by additivity and drop
    /// letters with zero argument. Every surviving letter has exponent +1.
    pub fn reduce(&self) -> Self {
        let mut out: Vec<Letter<R>> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let mut cur = Letter { root: l.root.clone(), t: l.signed_arg(), exp: 1 };
            if let Some(top) = out.last() {
                if top.root == cur.root {
                    let top = out.pop().expect("nonempty");
                    cur.t = top.t.add(&cur.t);
                }
            }
            if !cur.t.is_zero() {
                out.push(cur);
            }
        }
        SteinbergWord { letters: out }
    }
}

impl<R: Ring> fmt::Display for SteinbergWord<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x[{}]({})", l.root, l.t)?;
            if l.exp < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for SteinbergWord<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// π_S: the product of the e_α(±t) in order.
pub fn word_eval<R: Ring>(
    word: &SteinbergWord<R>,
    model: &ChevalleyModel,
    like: &R,
) -> Result<GroupElement<R>, SteinbergError> {
    let mut acc = model.identity(like);
    for l in word.letters() {
        acc = acc.mul(&model.e(&l.root, &l.signed_arg())?);
    }
    Ok(acc)
}

/// w̃_α(u) = x̃_α(u) x̃_{-α}(-u⁻¹) x̃_α(u).
pub fn w_word<R: Ring>(alpha: &Root, u: &R) -> Result<SteinbergWord<R>, SteinbergError> {
    let u_inv = u.try_inv().ok_or_else(|| SteinbergError::NotAUnit(u.to_string()))?;
    let x = SteinbergWord::letter(alpha, u);
    Ok(x.concat(&SteinbergWord::letter(&alpha.neg(), &u_inv.neg())).concat(&x))
}

/// h̃_α(u) = w̃_α(u) w̃_α(-1).
pub fn h_word<R: Ring>(alpha: &Root, u: &R) -> Result<SteinbergWord<R>, SteinbergError> {
    Ok(w_word(alpha, u)?.concat(&w_word(alpha, &u.one_like().neg())?))
}

/// (u, v)_α = h̃_α(u) h̃_α(v) h̃_α(uv)⁻¹, unreduced (18 letters).
pub fn symbol_word<R: Ring>(u: &R, v: &R, alpha: &Root) -> Result<SteinbergWord<R>, SteinbergError> {
    let hu = h_word(alpha, u)?;
    let hv = h_word(alpha, v)?;
    let huv = h_word(alpha, &u.mul(v))?;
    Ok(hu.concat(&hv).concat(&huv.inverse()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolKernelReport {
    pub word_length: usize,
    pub reduced_length: usize,
    pub evaluates_to_identity: bool,
}

/// Whether π_S kills the symbol (u, v)_α.
pub fn symbol_is_central_kernel<R: Ring>(
    u: &R,
    v: &R,
    alpha: &Root,
    model: &ChevalleyModel,
) -> Result<SymbolKernelReport, SteinbergError> {
    let word = symbol_word(u, v, alpha)?;
    let reduced = word.reduce();
    let g = word_eval(&word, model, u)?;
    Ok(SymbolKernelReport {
        word_length: word.len(),
        reduced_length: reduced.len(),
        evaluates_to_identity: g.is_identity(),
    })
}
