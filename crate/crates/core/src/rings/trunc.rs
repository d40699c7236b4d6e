//! Truncated polynomial algebras R[ε]/(ε^d).

use std::fmt;
use std::sync::Arc;

use crate::kernel::{MultiPoly, Rational, Ring};

use super::RingError;

/// Descriptor of K[ε]/(ε^d); `d = 1` is the base field itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruncAlgebra {
    d: usize,
}

impl TruncAlgebra {
    pub fn new(d: usize) -> Result<Self, RingError> {
        if d == 0 {
            return Err(RingError::InvalidOrder);
        }
        Ok(TruncAlgebra { d })
    }

    pub fn order(&self) -> usize {
        self.d
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> Result<TruncElement, RingError> {
        Trunc::from_coeffs(self.d, coeffs)
    }

    pub fn scalar(&self, c: Rational) -> TruncElement {
        Trunc::constant(self.d, c)
    }

    pub fn epsilon(&self) -> TruncElement {
        Trunc::epsilon(self.d, &Rational::one())
    }
}

/// Element x₀ + x₁ε + … + x_{d-1}ε^{d-1} with coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct Trunc<R> {
    coeffs: Vec<R>,
}

/// Elements of K[ε]/(ε^d) over the rationals.
pub type TruncElement = Trunc<Rational>;

impl<R: Ring> Trunc<R> {
    /// Coefficient vector of length at most `d`; missing entries are zero.
    /// Longer vectors are rejected.
    pub fn from_coeffs(d: usize, coeffs: Vec<R>) -> Result<Self, RingError>
    where
        R: Default,
    {
        if d == 0 {
            return Err(RingError::InvalidOrder);
        }
        if coeffs.len() > d {
            return Err(RingError::TooManyCoefficients { d, got: coeffs.len() });
        }
        let like = coeffs.first().cloned().unwrap_or_default();
        Ok(Self::padded(d, coeffs, &like))
    }

    /// Like [`Trunc::from_coeffs`] but with an explicit context element and
    /// truncation of anything beyond ε^{d-1}.
    pub fn padded(d: usize, mut coeffs: Vec<R>, like: &R) -> Self {
        assert!(d >= 1, "truncation order must be positive");
        coeffs.truncate(d);
        coeffs.resize(d, like.zero_like());
        Trunc { coeffs }
    }

    pub fn constant(d: usize, c: R) -> Self {
        let like = c.clone();
        Self::padded(d, vec![c], &like)
    }

    /// ε itself (zero when `d = 1`).
    pub fn epsilon(d: usize, like: &R) -> Self {
        Self::padded(d, vec![like.zero_like(), like.one_like()], like)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    /// x₀, the image in the residue field.
    pub fn residue(&self) -> &R {
        &self.coeffs[0]
    }

    /// The ε-tail x₁ε + … + x_{d-1}ε^{d-1}.
    pub fn tail(&self) -> Self {
        let mut c = self.coeffs.clone();
        c[0] = c[0].zero_like();
        Trunc { coeffs: c }
    }

    /// Smallest k with xₖ ≠ 0, or `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Trunc<S> {
        Trunc { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn check_order(&self, other: &Self) -> Result<(), RingError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(RingError::OrderMismatch(self.order(), other.order()))
        }
    }
}

impl TruncElement {
    /// Parse the `x0 + x1*e + x2*e^2` text form into K[ε]/(ε^d).
    pub fn parse(src: &str, d: usize) -> Result<Self, RingError> {
        let vars = MultiPoly::variables(&["e"]);
        let p = MultiPoly::parse(src, &vars)?;
        let mut coeffs = vec![Rational::zero(); d.max(1)];
        for (m, c) in p.terms() {
            let k = m.0[0] as usize;
            if k >= d {
                return Err(RingError::TooManyCoefficients { d, got: k + 1 });
            }
            coeffs[k] = c.clone();
        }
        Trunc::from_coeffs(d, coeffs)
    }

    /// Lift to `Trunc<MultiPoly>` with constant coefficients over `vars`.
    pub fn lift(&self, vars: &Arc<Vec<String>>) -> Trunc<MultiPoly> {
        self.map(|c| MultiPoly::constant(vars, c.clone()))
    }
}

pub fn trunc_add<R: Ring>(a: &Trunc<R>, b: &Trunc<R>) -> Result<Trunc<R>, RingError> {
    a.check_order(b)?;
    Ok(a.add(b))
}

pub fn trunc_mul<R: Ring>(a: &Trunc<R>, b: &Trunc<R>) -> Result<Trunc<R>, RingError> {
    a.check_order(b)?;
    Ok(a.mul(b))
}

/// Inverse by truncated geometric series; requires x₀ to be a unit.
pub fn trunc_inv<R: Ring>(a: &Trunc<R>) -> Result<Trunc<R>, RingError> {
    a.try_inv().ok_or_else(|| RingError::NotAUnit(a.to_string()))
}

impl<R: Ring> Ring for Trunc<R> {
    fn zero_like(&self) -> Self {
        Trunc { coeffs: self.coeffs.iter().map(Ring::zero_like).collect() }
    }
    fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = self.coeffs[0].one_like();
        z
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        Trunc { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect() }
    }
    fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        Trunc { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        let d = self.order();
        let mut out = self.zero_like();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(d - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Trunc { coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }
    fn try_inv(&self) -> Option<Self> {
        let x0_inv = self.coeffs[0].try_inv()?;
        // a = x0 (1 + n) with n nilpotent; a^{-1} = x0^{-1} Σ_{k<d} (-n)^k
        let scaled = self.map(|c| c.mul(&x0_inv));
        let minus_n = scaled.one_like().sub(&scaled);
        let mut acc = self.one_like();
        let mut power = self.one_like();
        for _ in 1..self.order() {
            power = power.mul(&minus_n);
            acc = acc.add(&power);
        }
        Some(acc.map(|c| c.mul(&x0_inv)))
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        let c = self.coeffs[0].from_rational_like(q);
        Self::padded(self.order(), vec![c], &self.coeffs[0])
    }
    fn same_domain(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs[0].same_domain(&other.coeffs[0])
    }
}

impl<R: Ring> fmt::Display for Trunc<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            if s.contains(' ') && !(s.starts_with('(') && s.ends_with(')')) {
                s = format!("({s})");
            }
            let neg = s.starts_with('-');
            let mag = if neg { &s[1..] } else { &s[..] };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*e")?,
                _ => write!(f, "{mag}*e^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Trunc<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod e^{})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(coeffs: &[i64]) -> TruncElement {
        let d = coeffs.len();
        TruncAlgebra::new(d).unwrap().element(coeffs.iter().map(|&c| Rational::from_int(c)).collect()).unwrap()
    }

    #[test]
    fn dual_number_product() {
        let p = trunc_mul(&el(&[1, 1]), &el(&[1, -1])).unwrap();
        assert!(p.is_one());
    }

    #[test]
    fn order_three_product() {
        let p = trunc_mul(&el(&[1, 1, 0]), &el(&[1, -1, 0])).unwrap();
        assert_eq!(p, el(&[1, 0, -1]));
    }

    #[test]
    fn epsilon_power_vanishes() {
        for d in 1..6 {
            let a = TruncAlgebra::new(d).unwrap();
            let e = a.epsilon();
            assert!(e.pow(d as u32 - 1).mul(&e).is_zero());
            if d > 1 {
                assert!(!e.pow(d as u32 - 1).is_zero());
            }
        }
    }

    #[test]
    fn mismatched_orders_error() {
        assert!(matches!(trunc_mul(&el(&[1, 1]), &el(&[1, 1, 1])), Err(RingError::OrderMismatch(2, 3))));
        assert!(trunc_add(&el(&[1]), &el(&[1, 0])).is_err());
    }

    #[test]
    fn geometric_series_inverse() {
        assert_eq!(trunc_inv(&el(&[1, 1])).unwrap(), el(&[1, -1]));
        assert_eq!(trunc_inv(&el(&[1, 1, 0, 0])).unwrap(), el(&[1, -1, 1, -1]));
        for d in 1..5 {
            let two = TruncAlgebra::new(d).unwrap().scalar(Rational::from_int(2));
            assert_eq!(trunc_inv(&two).unwrap(), TruncAlgebra::new(d).unwrap().scalar(Rational::frac(1, 2)));
        }
    }

    #[test]
    fn non_unit_rejected() {
        assert!(matches!(trunc_inv(&el(&[0, 1, 3])), Err(RingError::NotAUnit(_))));
    }

    #[test]
    fn text_form() {
        let x = el(&[1, 0, -1]);
        assert_eq!(x.to_string(), "1 - 1*e^2");
        assert_eq!(TruncElement::parse("1 - 1*e^2", 3).unwrap(), x);
        let y = TruncAlgebra::new(3).unwrap().element(vec![Rational::frac(1, 2), Rational::frac(-3, 4)]).unwrap();
        assert_eq!(y.to_string(), "1/2 - 3/4*e");
        assert_eq!(TruncElement::parse(&y.to_string(), 3).unwrap(), y);
        assert!(TruncElement::parse("e^3", 3).is_err());
        assert_eq!(el(&[0, 0]).to_string(), "0");
    }
}
