//! The commutative-ring interface shared by every coefficient domain.

use std::fmt;

use super::Rational;

/// A commutative Q-algebra with identity.
///
/// Elements carry their own context (truncation order, minimal polynomial,
/// variable list), so constants are produced from an existing element with
/// the `*_like` constructors. Binary operations assume both operands come
/// from the same domain; callers that cannot guarantee this check
/// [`Ring::same_domain`] first.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse, if the element is a unit.
    fn try_inv(&self) -> Option<Self>;

    /// Image of a rational number under the structure map Q -> Self.
    fn from_rational_like(&self, q: &Rational) -> Self;

    /// Whether `self` and `other` live in the same concrete ring.
    fn same_domain(&self, _other: &Self) -> bool {
        true
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn is_unit(&self) -> bool {
        self.try_inv().is_some()
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.from_rational_like(&Rational::from_int(n))
    }

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&self.from_rational_like(q))
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        self.try_inv()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.try_inv().map(|r| self.mul(&r))
    }
}
