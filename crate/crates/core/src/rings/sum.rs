//! Finite direct sums ⊕ K[ε_i]/(ε_i^{d_i}) and ring homomorphisms into them.

use std::fmt;

use crate::kernel::{Assignment, MultiPoly, Rational, Ring};

use super::{RingError, Trunc, TruncAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumAlgebra {
    factors: Vec<TruncAlgebra>,
}

impl SumAlgebra {
    pub fn new(factors: Vec<TruncAlgebra>) -> Result<Self, RingError> {
        if factors.is_empty() {
            return Err(RingError::EmptySum);
        }
        Ok(SumAlgebra { factors })
    }

    pub fn from_orders(orders: &[usize]) -> Result<Self, RingError> {
        let factors = orders.iter().map(|&d| TruncAlgebra::new(d)).collect::<Result<_, _>>()?;
        Self::new(factors)
    }

    pub fn factors(&self) -> &[TruncAlgebra] {
        &self.factors
    }

    /// Dimension over the base field, Σ d_i.
    pub fn dimension(&self) -> usize {
        self.factors.iter().map(TruncAlgebra::order).sum()
    }

    pub fn element<R: Ring>(&self, parts: Vec<Trunc<R>>) -> Result<SumElement<R>, RingError> {
        if parts.len() != self.factors.len() {
            return Err(RingError::FactorCount { expected: self.factors.len(), got: parts.len() });
        }
        for (p, f) in parts.iter().zip(&self.factors) {
            if p.order() != f.order() {
                return Err(RingError::OrderMismatch(f.order(), p.order()));
            }
        }
        Ok(SumElement { parts })
    }

    /// The element c·(1, …, 1).
    pub fn scalar<R: Ring>(&self, c: &R) -> SumElement<R> {
        SumElement { parts: self.factors.iter().map(|f| Trunc::constant(f.order(), c.clone())).collect() }
    }
}

/// A strict tuple of components, one per factor.
#[derive(Clone, PartialEq)]
pub struct SumElement<R> {
    parts: Vec<Trunc<R>>,
}

impl<R: Ring> SumElement<R> {
    pub fn parts(&self) -> &[Trunc<R>] {
        &self.parts
    }

    pub fn component(&self, i: usize) -> &Trunc<R> {
        &self.parts[i]
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Trunc<R>, &Trunc<R>) -> Trunc<R>) -> Self {
        assert_eq!(self.parts.len(), rhs.parts.len(), "factor counts differ");
        SumElement { parts: self.parts.iter().zip(&rhs.parts).map(|(a, b)| f(a, b)).collect() }
    }
}

impl<R: Ring> Ring for SumElement<R> {
    fn zero_like(&self) -> Self {
        SumElement { parts: self.parts.iter().map(Ring::zero_like).collect() }
    }
    fn one_like(&self) -> Self {
        SumElement { parts: self.parts.iter().map(Ring::one_like).collect() }
    }
    fn is_zero(&self) -> bool {
        self.parts.iter().all(Ring::is_zero)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.add(b))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.sub(b))
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.mul(b))
    }
    fn neg(&self) -> Self {
        SumElement { parts: self.parts.iter().map(Ring::neg).collect() }
    }
    fn try_inv(&self) -> Option<Self> {
        let parts = self.parts.iter().map(Ring::try_inv).collect::<Option<Vec<_>>>()?;
        Some(SumElement { parts })
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        SumElement { parts: self.parts.iter().map(|p| p.from_rational_like(q)).collect() }
    }
    fn same_domain(&self, other: &Self) -> bool {
        self.parts.len() == other.parts.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a.same_domain(b))
    }
}

impl<R: Ring> fmt::Display for SumElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl<R: Ring> fmt::Debug for SumElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial ring over Z presented by generators and integral relations,
/// e.g. Z[X] (no relations) or Z[w][X] with w² - 2 = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySource {
    pub generators: Vec<String>,
    pub relations: Vec<MultiPoly>,
}

impl PolySource {
    pub fn free(generators: &[&str]) -> Self {
        PolySource { generators: generators.iter().map(|s| s.to_string()).collect(), relations: vec![] }
    }
}

/// Ring homomorphism from a [`PolySource`] into a direct sum, fixed by the
/// images of the generators.
#[derive(Clone, Debug)]
pub struct RingHom<R: Ring> {
    source: PolySource,
    images: Assignment<SumElement<R>>,
    unit: SumElement<R>,
}

impl<R: Ring> RingHom<R> {
    /// Checks that every defining relation maps to zero.
    pub fn new(source: PolySource, images: Vec<SumElement<R>>) -> Result<Self, RingError> {
        if images.len() != source.generators.len() {
            return Err(RingError::FactorCount { expected: source.generators.len(), got: images.len() });
        }
        if let Some(rel) = source.relations.iter().find(|r| r.terms().any(|(_, c)| !c.is_integer())) {
            return Err(RingError::NonIntegralRelation(rel.to_string()));
        }
        let unit = images[0].one_like();
        let images: Assignment<SumElement<R>> = source.generators.iter().cloned().zip(images).collect();
        let hom = RingHom { source, images, unit };
        for rel in &hom.source.relations {
            let v = rel.eval(&hom.images, &hom.unit)?;
            if !v.is_zero() {
                return Err(RingError::RelationNotRespected { relation: rel.to_string(), value: v.to_string() });
            }
        }
        Ok(hom)
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<SumElement<R>, RingError> {
        if p.terms().any(|(_, c)| !c.is_integer()) {
            return Err(RingError::NonIntegralRelation(p.to_string()));
        }
        Ok(p.eval(&self.images, &self.unit)?)
    }

    pub fn source(&self) -> &PolySource {
        &self.source
    }
}
