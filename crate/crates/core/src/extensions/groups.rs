//! Groups given by explicit multiplication, and central extensions built
//! from 2-cocycles.

use std::fmt;
use std::sync::Arc;

use crate::chevalley::GroupElement;
use crate::kernel::{Matrix, Rational, Ring};

pub trait Group {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// [a, b] = a b a⁻¹ b⁻¹.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        self.mul(&self.mul(&ab, &self.inv(a)), &self.inv(b))
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }
}

/// [u,v][u,w] = [u,vw][v,[w,u]].
pub fn commutator_identity_holds<G: Group>(g: &G, u: &G::Elem, v: &G::Elem, w: &G::Elem) -> bool {
    let lhs = g.mul(&g.commutator(u, v), &g.commutator(u, w));
    let rhs = g.mul(&g.commutator(u, &g.mul(v, w)), &g.commutator(v, &g.commutator(w, u)));
    lhs == rhs
}

/// Associativity, two-sided identity and two-sided inverses on one triple.
pub fn group_axioms_hold<G: Group>(g: &G, a: &G::Elem, b: &G::Elem, c: &G::Elem) -> bool {
    let e = g.identity();
    g.mul(&g.mul(a, b), c) == g.mul(a, &g.mul(b, c))
        && g.mul(&e, a) == *a
        && g.mul(a, &e) == *a
        && g.is_identity(&g.mul(a, &g.inv(a)))
        && g.is_identity(&g.mul(&g.inv(a), a))
}

/// Invertible n×n matrices over a ring, elements carried with their inverses.
#[derive(Clone, Debug)]
pub struct MatrixGroup<R: Ring> {
    n: usize,
    like: R,
}

impl<R: Ring> MatrixGroup<R> {
    pub fn new(n: usize, like: &R) -> Self {
        MatrixGroup { n, like: like.clone() }
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

impl<R: Ring> Group for MatrixGroup<R> {
    type Elem = GroupElement<R>;

    fn identity(&self) -> GroupElement<R> {
        GroupElement::identity(self.n, &self.like)
    }
    fn mul(&self, a: &GroupElement<R>, b: &GroupElement<R>) -> GroupElement<R> {
        a.mul(b)
    }
    fn inv(&self, a: &GroupElement<R>) -> GroupElement<R> {
        a.inverse()
    }
}

/// n×n rational matrices under addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdditiveMatrices {
    n: usize,
}

impl AdditiveMatrices {
    pub fn new(n: usize) -> Self {
        AdditiveMatrices { n }
    }
}

impl Group for AdditiveMatrices {
    type Elem = Matrix<Rational>;

    fn identity(&self) -> Matrix<Rational> {
        Matrix::zeros(self.n, self.n, &Rational::zero())
    }
    fn mul(&self, a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
        a + b
    }
    fn inv(&self, a: &Matrix<Rational>) -> Matrix<Rational> {
        a.neg()
    }
}

#[derive(Clone, Debug)]
pub struct ProductGroup<G1, G2> {
    pub left: G1,
    pub right: G2,
}

impl<G1: Group, G2: Group> ProductGroup<G1, G2> {
    pub fn new(left: G1, right: G2) -> Self {
        ProductGroup { left, right }
    }

    /// g₁ ↦ (g₁, 1).
    pub fn include_left(&self, a: &G1::Elem) -> (G1::Elem, G2::Elem) {
        (a.clone(), self.right.identity())
    }

    /// g₂ ↦ (1, g₂).
    pub fn include_right(&self, b: &G2::Elem) -> (G1::Elem, G2::Elem) {
        (self.left.identity(), b.clone())
    }
}

impl<G1: Group, G2: Group> Group for ProductGroup<G1, G2> {
    type Elem = (G1::Elem, G2::Elem);

    fn identity(&self) -> Self::Elem {
        (self.left.identity(), self.right.identity())
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.mul(&a.0, &b.0), self.right.mul(&a.1, &b.1))
    }
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        (self.left.inv(&a.0), self.right.inv(&a.1))
    }
}

pub type Cocycle<E> = Arc<dyn Fn(&E, &E) -> Vec<Rational> + Send + Sync>;

/// G ×_c Q^k with (g₁,z₁)(g₂,z₂) = (g₁g₂, z₁ + z₂ + c(g₁,g₂)).
#[derive(Clone)]
pub struct CocycleExtension<G: Group> {
    base: G,
    center_dim: usize,
    cocycle: Cocycle<G::Elem>,
}

/// An element (g, z) of a [`CocycleExtension`].
#[derive(Clone, Debug, PartialEq)]
pub struct ExtElem<E> {
    pub g: E,
    pub z: Vec<Rational>,
}

fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl<G: Group> CocycleExtension<G> {
    pub fn new(base: G, center_dim: usize, cocycle: Cocycle<G::Elem>) -> Self {
        CocycleExtension { base, center_dim, cocycle }
    }

    /// The split extension G × Q^k.
    pub fn trivial(base: G, center_dim: usize) -> Self
    where
        G::Elem: 'static,
    {
        let zero = vec![Rational::zero(); center_dim];
        Self::new(base, center_dim, Arc::new(move |_, _| zero.clone()))
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    pub fn center_dim(&self) -> usize {
        self.center_dim
    }

    pub fn cocycle(&self, a: &G::Elem, b: &G::Elem) -> Vec<Rational> {
        (self.cocycle)(a, b)
    }

    pub fn element(&self, g: G::Elem, z: Vec<Rational>) -> ExtElem<G::Elem> {
        assert_eq!(z.len(), self.center_dim, "central component has wrong length");
        ExtElem { g, z }
    }

    /// The lift (g, 0).
    pub fn lift(&self, g: &G::Elem) -> ExtElem<G::Elem> {
        self.element(g.clone(), vec![Rational::zero(); self.center_dim])
    }

    pub fn central(&self, z: Vec<Rational>) -> ExtElem<G::Elem> {
        self.element(self.base.identity(), z)
    }

    pub fn project(&self, e: &ExtElem<G::Elem>) -> G::Elem {
        e.g.clone()
    }

    /// c(a,b) + c(ab,c) = c(a,bc) + c(b,c).
    pub fn cocycle_identity_holds(&self, a: &G::Elem, b: &G::Elem, c: &G::Elem) -> bool {
        let g = &self.base;
        let lhs = add_vec(&self.cocycle(a, b), &self.cocycle(&g.mul(a, b), c));
        let rhs = add_vec(&self.cocycle(a, &g.mul(b, c)), &self.cocycle(b, c));
        lhs == rhs
    }

    /// c(1,g) = c(g,1) = 0.
    pub fn is_normalized_at(&self, a: &G::Elem) -> bool {
        let e = self.base.identity();
        self.cocycle(&e, a).iter().all(Rational::is_zero) && self.cocycle(a, &e).iter().all(Rational::is_zero)
    }
}

impl<G: Group> Group for CocycleExtension<G> {
    type Elem = ExtElem<G::Elem>;

    fn identity(&self) -> Self::Elem {
        self.lift(&self.base.identity())
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let z = add_vec(&add_vec(&a.z, &b.z), &self.cocycle(&a.g, &b.g));
        ExtElem { g: self.base.mul(&a.g, &b.g), z }
    }
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        let g_inv = self.base.inv(&a.g);
        let c = self.cocycle(&a.g, &g_inv);
        let z = a.z.iter().zip(&c).map(|(x, y)| -&(x + y)).collect();
        ExtElem { g: g_inv, z }
    }
}

/// Upper unitriangular 3×3 matrix with entries a (1,2), b (2,3), c (1,3).
pub fn unitriangular(a: &Rational, b: &Rational, c: &Rational) -> GroupElement<Rational> {
    let (one, zero) = (Rational::one(), Rational::zero());
    let mat = Matrix::from_rows(vec![
        vec![one.clone(), a.clone(), c.clone()],
        vec![zero.clone(), one.clone(), b.clone()],
        vec![zero.clone(), zero.clone(), one.clone()],
    ])
    .expect("3x3");
    let inv = Matrix::from_rows(vec![
        vec![one.clone(), -a, &(a * b) - c],
        vec![zero.clone(), one.clone(), -b],
        vec![zero.clone(), zero, one],
    ])
    .expect("3x3");
    GroupElement::with_inverse(mat, inv).expect("explicit inverse")
}

/// Extension of the 3×3 unitriangular group by Q via the antisymmetrized
/// bilinear form k·(g₁₂h₂₃ - h₁₂g₂₃) on the abelianization.
pub fn unitriangular_extension(k: Rational) -> CocycleExtension<MatrixGroup<Rational>> {
    let group = MatrixGroup::new(3, &Rational::one());
    let cocycle: Cocycle<GroupElement<Rational>> = Arc::new(move |g, h| {
        let (g, h) = (g.matrix(), h.matrix());
        let form = &(g.get(0, 1) * h.get(1, 2)) - &(h.get(0, 1) * g.get(1, 2));
        vec![&k * &form]
    });
    CocycleExtension::new(group, 1, cocycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn unitriangular_inverse() {
        let g = unitriangular(&q(2), &q(3), &q(5));
        assert!(g.mul(&g.inverse()).is_identity());
    }

    #[test]
    fn unitriangular_extension_is_a_group() {
        let ext = unitriangular_extension(q(3));
        let a = unitriangular(&q(1), &q(2), &q(0));
        let b = unitriangular(&q(-1), &q(4), &q(7));
        let c = unitriangular(&q(5), &q(0), &q(-2));
        assert!(ext.cocycle_identity_holds(&a, &b, &c));
        assert!(ext.is_normalized_at(&a));
        let x = ext.element(a.clone(), vec![q(9)]);
        let y = ext.element(b.clone(), vec![q(-4)]);
        assert!(ext.is_identity(&ext.mul(&x, &ext.inv(&x))));
        assert!(ext.is_identity(&ext.mul(&ext.inv(&x), &x)));
        assert!(commutator_identity_holds(&ext, &x, &y, &ext.lift(&c)));
    }

    #[test]
    fn product_group_componentwise() {
        let p = ProductGroup::new(AdditiveMatrices::new(2), MatrixGroup::new(3, &q(1)));
        let a = p.include_left(&Matrix::identity(2, &q(1)));
        let b = p.include_right(&unitriangular(&q(1), &q(1), &q(1)));
        assert_eq!(p.mul(&a, &b), p.mul(&b, &a));
        assert!(p.is_identity(&p.mul(&a, &p.inv(&a))));
    }
}
