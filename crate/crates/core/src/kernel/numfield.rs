//! Algebraic number fields Q(θ) = Q[x]/(m) with m monic over the integers.

use std::fmt;
use std::sync::Arc;

use super::{rref, Field, KernelError, Matrix, Rational, Ring};

/// The field Q[x]/(m). `m` is stored as ascending coefficients and must be
/// monic with integer coefficients; irreducibility is the caller's promise
/// (inversion reports a zero divisor if it is broken).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    generator: String,
    minpoly: Vec<Rational>,
}

impl NumberField {
    pub fn new(generator: &str, minpoly: Vec<Rational>) -> Result<Arc<Self>, KernelError> {
        if minpoly.len() < 2 {
            return Err(KernelError::InvalidMinpoly("degree must be at least 1".into()));
        }
        if !minpoly.last().is_some_and(|c| c.is_one()) {
            return Err(KernelError::InvalidMinpoly("minimal polynomial must be monic".into()));
        }
        if let Some(c) = minpoly.iter().find(|c| !c.is_integer()) {
            return Err(KernelError::InvalidMinpoly(format!("coefficient {c} is not an integer")));
        }
        Ok(Arc::new(NumberField { generator: generator.to_string(), minpoly }))
    }

    /// Q(√d) with generator name `name`.
    pub fn quadratic(name: &str, d: i64) -> Arc<Self> {
        Self::new(name, vec![Rational::from_int(-d), Rational::zero(), Rational::one()]).expect("x^2 - d is monic")
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    /// Reduce an arbitrary-length coefficient vector modulo the minimal polynomial.
    fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        let n = self.degree();
        while coeffs.len() > n {
            let top = coeffs.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - n;
            for (k, m) in self.minpoly[..n].iter().enumerate() {
                coeffs[shift + k] = &coeffs[shift + k] - &(&top * m);
            }
        }
        coeffs.resize(n, Rational::zero());
        coeffs
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({}) mod {:?}", self.generator, self.minpoly)
    }
}

/// An element of a [`NumberField`], stored in the power basis 1, θ, …, θ^{n-1}.
#[derive(Clone)]
pub struct NumberFieldElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl NumberFieldElement {
    pub fn new(field: &Arc<NumberField>, coords: Vec<Rational>) -> Self {
        let coords = field.reduce(coords);
        NumberFieldElement { field: Arc::clone(field), coords }
    }

    pub fn from_rational(field: &Arc<NumberField>, q: Rational) -> Self {
        Self::new(field, vec![q])
    }

    /// The generator θ.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::new(field, vec![Rational::zero(), Rational::one()])
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// Matrix of multiplication by `self` in the power basis (column j = self·θ^j).
    fn mult_matrix(&self) -> Matrix<Rational> {
        let n = self.field.degree();
        let mut m = Matrix::zeros(n, n, &Rational::zero());
        for j in 0..n {
            let mut basis = vec![Rational::zero(); n];
            basis[j] = Rational::one();
            let col = self.mul(&NumberFieldElement::new(&self.field, basis));
            for i in 0..n {
                m.set(i, j, col.coords[i].clone());
            }
        }
        m
    }

    /// Evaluate a polynomial with rational coefficients (ascending) at this element.
    pub fn eval_poly(&self, coeffs: &[Rational]) -> Self {
        let mut acc = self.zero_like();
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).add(&self.from_rational_like(c));
        }
        acc
    }
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_domain(other) && self.coords == other.coords
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &Rational)> = self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let g = &self.field.generator;
        let mut out = String::new();
        for (idx, (k, c)) in terms.iter().enumerate() {
            let (sign, mag) = if c.signum() < 0 { ("-", c.abs()) } else { ("+", (*c).clone()) };
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            match k {
                0 => out.push_str(&mag.to_string()),
                1 => out.push_str(&format!("{mag}*{g}")),
                _ => out.push_str(&format!("{mag}*{g}^{k}")),
            }
        }
        if terms.len() > 1 {
            write!(f, "({out})")
        } else {
            write!(f, "{out}")
        }
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for NumberFieldElement {
    fn zero_like(&self) -> Self {
        NumberFieldElement::new(&self.field, vec![])
    }
    fn one_like(&self) -> Self {
        NumberFieldElement::new(&self.field, vec![Rational::one()])
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        NumberFieldElement { field: Arc::clone(&self.field), coords }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        NumberFieldElement { field: Arc::clone(&self.field), coords }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let n = self.coords.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                prod[i + j] = &prod[i + j] + &(a * b);
            }
        }
        NumberFieldElement::new(&self.field, prod)
    }
    fn neg(&self) -> Self {
        let coords = self.coords.iter().map(|c| -c).collect();
        NumberFieldElement { field: Arc::clone(&self.field), coords }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.field.degree();
        let m = self.mult_matrix();
        let mut rhs = vec![Rational::zero(); n];
        rhs[0] = Rational::one();
        let sol = m.solve(&rhs)?;
        Some(NumberFieldElement::new(&self.field, sol))
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        NumberFieldElement::from_rational(&self.field, q.clone())
    }
    fn same_domain(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }
}

impl Field for NumberFieldElement {}

impl Matrix<Rational> {
    /// Unique solution of the square system `self · x = rhs`, if it exists.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        let n = self.rows();
        if n != self.cols() || rhs.len() != n {
            return None;
        }
        let mut aug = Matrix::zeros(n, n + 1, &Rational::zero());
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, rhs[i].clone());
        }
        let red = rref(&aug).ok()?;
        if red.rank != n || red.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        Some((0..n).map(|i| red.reduced.get(i, n).clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2() -> (Arc<NumberField>, NumberFieldElement) {
        let k = NumberField::quadratic("w", 2);
        let w = NumberFieldElement::generator(&k);
        (k, w)
    }

    #[test]
    fn generator_satisfies_minpoly() {
        let (k, w) = sqrt2();
        assert!(w.eval_poly(k.minpoly()).is_zero());
        assert_eq!(w.mul(&w), w.from_int_like(2));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let (_, w) = sqrt2();
        let x = w.add(&w.one_like());
        let inv = x.try_inv().unwrap();
        // (1 + w)^{-1} = w - 1
        assert_eq!(inv, w.sub(&w.one_like()));
        assert!(w.zero_like().try_inv().is_none());
    }

    #[test]
    fn cubic_field_arithmetic() {
        let k =
            NumberField::new("t", vec![Rational::from_int(-2), Rational::zero(), Rational::zero(), Rational::one()])
                .unwrap();
        let t = NumberFieldElement::generator(&k);
        assert_eq!(t.pow(3), t.from_int_like(2));
        assert_eq!(t.pow(4), t.scale(&Rational::from_int(2)));
        let u = t.add(&t.pow(2)).add(&t.one_like());
        assert!(u.mul(&u.try_inv().unwrap()).is_one());
        assert_eq!(u.to_string(), "(1 + 1*t + 1*t^2)");
    }

    #[test]
    fn rejects_bad_minpoly() {
        assert!(NumberField::new("x", vec![Rational::one()]).is_err());
        assert!(NumberField::new("x", vec![Rational::one(), Rational::from_int(2)]).is_err());
        assert!(NumberField::new("x", vec![Rational::frac(1, 2), Rational::one()]).is_err());
    }
}
