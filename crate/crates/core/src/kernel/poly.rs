//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic on the declared variable order; printing walks the
//! map from the largest monomial down, so serialization is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{KernelError, Rational, Ring};

/// Exponent vector, one entry per declared variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable assignment used by [`MultiPoly::eval`].
pub type Assignment<T> = BTreeMap<String, T>;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        MultiPoly { vars: Arc::clone(vars), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    /// Shared variable list from names.
    pub fn variables<S: AsRef<str>>(names: &[S]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn var(vars: &Arc<Vec<String>>, name: &str) -> Result<Self, KernelError> {
        let idx = vars.iter().position(|v| v == name).ok_or_else(|| KernelError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Ok(Self::monomial(vars, Monomial(e), Rational::one()))
    }

    pub fn monomial(vars: &Arc<Vec<String>>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Re-express over a larger variable list containing all current variables.
    pub fn with_variables(&self, vars: &Arc<Vec<String>>) -> Result<Self, KernelError> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).ok_or_else(|| KernelError::UnknownVariable(v.clone())))
            .collect::<Result<_, _>>()?;
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (k, &pos) in map.iter().enumerate() {
                e[pos] = m.0[k];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `var`.
    pub fn partial(&self, var: &str) -> Result<Self, KernelError> {
        let idx =
            self.vars.iter().position(|v| v == var).ok_or_else(|| KernelError::UnknownVariable(var.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[idx] -= 1;
            out.add_term(m2, c * &Rational::from_int(e as i64));
        }
        Ok(out)
    }

    /// Names of variables that occur with nonzero exponent.
    pub fn occurring_variables(&self) -> Vec<&str> {
        (0..self.vars.len()).filter(|&k| self.terms.keys().any(|m| m.0[k] > 0)).map(|k| self.vars[k].as_str()).collect()
    }

    /// Exact evaluation in any ring. Every occurring variable must be
    /// assigned; `unit` supplies the target ring's context.
    pub fn eval<T: Ring>(&self, point: &Assignment<T>, unit: &T) -> Result<T, KernelError> {
        let mut values: Vec<Option<&T>> = Vec::with_capacity(self.vars.len());
        for (k, name) in self.vars.iter().enumerate() {
            let used = self.terms.keys().any(|m| m.0[k] > 0);
            match point.get(name) {
                Some(v) => values.push(Some(v)),
                None if used => return Err(KernelError::UnassignedVariable(name.clone())),
                None => values.push(None),
            }
        }
        let mut powers: Vec<Vec<T>> = values
            .iter()
            .map(|v| match v {
                Some(x) => vec![x.one_like(), (*x).clone()],
                None => vec![unit.one_like()],
            })
            .collect();
        let mut acc = unit.zero_like();
        for (m, c) in &self.terms {
            let mut term = unit.from_rational_like(c);
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[k].len() <= e {
                    let next = powers[k].last().expect("nonempty").mul(&powers[k][1]);
                    powers[k].push(next);
                }
                term = term.mul(&powers[k][e]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Rational evaluation; convenience wrapper around [`MultiPoly::eval`].
    pub fn eval_rational(&self, point: &Assignment<Rational>) -> Result<Rational, KernelError> {
        self.eval(point, &Rational::one())
    }

    /// Parse an expression such as `X^3 - Y^2` or `3/2*X*(Y + 1)` over `vars`.
    pub fn parse(src: &str, vars: &Arc<Vec<String>>) -> Result<Self, KernelError> {
        let mut parser = Parser { src: src.as_bytes(), pos: 0, vars };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, &e)| if e == 1 { self.vars[k].clone() } else { format!("{}^{}", self.vars[k], e) })
                    .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q[{}]", self.vars.join(","))
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::constant(&self.vars, Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        MultiPoly { vars: Arc::clone(&self.vars), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn try_inv(&self) -> Option<Self> {
        let c = self.as_constant()?;
        c.recip().map(|r| MultiPoly::constant(&self.vars, r))
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        MultiPoly::constant(&self.vars, q.clone())
    }
    fn same_domain(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Arc<Vec<String>>,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> KernelError {
        KernelError::Parse(format!("{msg} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly, KernelError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, KernelError> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == b'*' {
                acc = acc.mul(&rhs);
            } else {
                let c = rhs.as_constant().ok_or_else(|| self.error("division by a non-constant"))?;
                let inv = c.recip().ok_or_else(|| self.error("division by zero"))?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, KernelError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, KernelError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
            let e: u32 = digits.parse().map_err(|_| self.error("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, KernelError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let q: Rational = digits.parse()?;
                Ok(MultiPoly::constant(self.vars, q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                MultiPoly::var(self.vars, name)
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Vec<String>> {
        MultiPoly::variables(&["X", "Y"])
    }

    fn pt(x: i64, y: i64) -> Assignment<Rational> {
        [("X".to_string(), Rational::from_int(x)), ("Y".to_string(), Rational::from_int(y))].into_iter().collect()
    }

    #[test]
    fn cusp_vanishes_at_one_one() {
        let p = MultiPoly::parse("X^3 - Y^2", &xy()).unwrap();
        assert!(p.eval_rational(&pt(1, 1)).unwrap().is_zero());
    }

    #[test]
    fn evaluation_at_origin_is_constant_term() {
        let p = MultiPoly::parse("7/3 + X*Y - 4*Y^5", &xy()).unwrap();
        assert_eq!(p.eval_rational(&pt(0, 0)).unwrap(), Rational::frac(7, 3));
        assert_eq!(p.constant_term(), Rational::frac(7, 3));
    }

    #[test]
    fn binomial_identity_is_zero_polynomial() {
        let p = MultiPoly::parse("(X+Y)^2 - X^2 - 2*X*Y - Y^2", &xy()).unwrap();
        assert!(p.is_zero());
        assert!(p.eval_rational(&pt(5, 7)).unwrap().is_zero());
    }

    #[test]
    fn unassigned_variable_is_named() {
        let p = MultiPoly::parse("X + Y", &xy()).unwrap();
        let mut a = Assignment::new();
        a.insert("X".to_string(), Rational::one());
        match p.eval_rational(&a) {
            Err(KernelError::UnassignedVariable(v)) => assert_eq!(v, "Y"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn grlex_display_is_canonical() {
        let p = MultiPoly::parse("1 - Y^2 + X^3 + 3/2*X*Y", &xy()).unwrap();
        assert_eq!(p.to_string(), "X^3 + 3/2*X*Y - Y^2 + 1");
        let q = MultiPoly::parse(&p.to_string(), &xy()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn partial_derivatives() {
        let p = MultiPoly::parse("X^3 - Y^2", &xy()).unwrap();
        assert_eq!(p.partial("X").unwrap().to_string(), "3*X^2");
        assert_eq!(p.partial("Y").unwrap().to_string(), "-2*Y");
        assert!(p.partial("Z").is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(MultiPoly::parse("X +", &xy()).is_err());
        assert!(MultiPoly::parse("Z", &xy()).is_err());
        assert!(MultiPoly::parse("X / Y", &xy()).is_err());
        assert!(MultiPoly::parse("(X", &xy()).is_err());
    }

    #[test]
    fn evaluation_into_polynomial_ring() {
        let vars = MultiPoly::variables(&["s"]);
        let s = MultiPoly::var(&vars, "s").unwrap();
        let p = MultiPoly::parse("X*Y + 1", &xy()).unwrap();
        let mut a = Assignment::new();
        a.insert("X".to_string(), s.clone());
        a.insert("Y".to_string(), s.clone());
        assert_eq!(p.eval(&a, &s.one_like()).unwrap().to_string(), "s^2 + 1");
    }
}
