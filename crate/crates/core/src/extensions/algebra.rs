//! Finite-dimensional commutative Q-algebras by structure constants, and
//! their splitting into local factors.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::kernel::{rank_of, rref, Matrix, Rational, Ring};
use crate::rings::{SumAlgebra, SumElement, Trunc};

use super::ExtensionError;

/// Basis e_0..e_{n-1}; `table[i][j]` holds the coordinates of e_i·e_j.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimAlgebra {
    names: Vec<String>,
    table: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
}

fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Rational::is_zero)
}

/// Row-reduced basis of the span.
fn span(vectors: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let r = rref(&Matrix::from_rows(vectors.to_vec()).expect("rectangular")).expect("rationals");
    (0..r.rank).map(|i| r.reduced.row(i).to_vec()).filter(|v| v.len() == n).collect()
}

fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if is_zero(v) {
        return true;
    }
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    rank_of(&all).expect("rationals") == basis.len()
}

impl FinDimAlgebra {
    /// Checks commutativity, associativity and the unit.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<Vec<Rational>>>,
        unit: Vec<Rational>,
    ) -> Result<Self, ExtensionError> {
        let n = names.len();
        if n == 0 {
            return Err(ExtensionError::BadAlgebra("defined on a nonzero space".into()));
        }
        let shape_ok = unit.len() == n
            && table.len() == n
            && table.iter().all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
        if !shape_ok {
            return Err(ExtensionError::BadAlgebra("given by an n x n x n table".into()));
        }
        let b = FinDimAlgebra { names, table, unit };
        for i in 0..n {
            for j in 0..n {
                if b.table[i][j] != b.table[j][i] {
                    return Err(ExtensionError::BadAlgebra(format!(
                        "commutative: {} * {} != {} * {}",
                        b.names[i], b.names[j], b.names[j], b.names[i]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = b.mul(&b.table[i][j], &b.basis_vector(k));
                    let rhs = b.mul(&b.basis_vector(i), &b.table[j][k]);
                    if lhs != rhs {
                        return Err(ExtensionError::BadAlgebra(format!(
                            "associative on ({}, {}, {})",
                            b.names[i], b.names[j], b.names[k]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            if b.mul(&b.unit, &b.basis_vector(i)) != b.basis_vector(i) {
                return Err(ExtensionError::BadAlgebra(format!("unital at {}", b.names[i])));
            }
        }
        Ok(b)
    }

    /// Q[X]/(m(X)) for monic m given leading coefficient first.
    pub fn from_univariate(modulus: &[Rational]) -> Result<Self, ExtensionError> {
        let n = modulus.len().saturating_sub(1);
        if n == 0 || !modulus[0].is_one() {
            return Err(ExtensionError::BadAlgebra("defined by a monic modulus of degree >= 1".into()));
        }
        // X^n = -(c_{n-1} X^{n-1} + … + c_0)
        let reduce = |mut v: Vec<Rational>| {
            for top in (n..v.len()).rev() {
                let c = v[top].clone();
                if c.is_zero() {
                    continue;
                }
                for k in 1..=n {
                    v[top - k] = &v[top - k] - &(&c * &modulus[k]);
                }
                v[top] = Rational::zero();
            }
            v.truncate(n);
            v
        };
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = zero_vec(2 * n);
                        v[i + j] = Rational::one();
                        reduce(v)
                    })
                    .collect()
            })
            .collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            })
            .collect();
        let mut unit = zero_vec(n);
        unit[0] = Rational::one();
        Self::new(names, table, unit)
    }

    /// Q ⊕ Q·ε₁ ⊕ Q·ε₂ with all products of ε's zero.
    pub fn square_zero(k: usize) -> Result<Self, ExtensionError> {
        let n = k + 1;
        let mut table = vec![vec![zero_vec(n); n]; n];
        for i in 0..n {
            table[0][i][i] = Rational::one();
            table[i][0][i] = Rational::one();
        }
        let names = std::iter::once("1".to_string()).chain((1..=k).map(|i| format!("e{i}"))).collect();
        let mut unit = zero_vec(n);
        unit[0] = Rational::one();
        Self::new(names, table, unit)
    }

    pub fn direct_sum(parts: &[FinDimAlgebra]) -> Result<Self, ExtensionError> {
        let n: usize = parts.iter().map(FinDimAlgebra::dim).sum();
        let mut table = vec![vec![zero_vec(n); n]; n];
        let mut unit = zero_vec(n);
        let mut names = Vec::with_capacity(n);
        let mut off = 0;
        for (p, b) in parts.iter().enumerate() {
            let m = b.dim();
            for i in 0..m {
                names.push(format!("{}_{}", b.names[i], p + 1));
                unit[off + i] = b.unit[i].clone();
                for j in 0..m {
                    for k in 0..m {
                        table[off + i][off + j][off + k] = b.table[i][j][k].clone();
                    }
                }
            }
            off += m;
        }
        Self::new(names, table, unit)
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn with_basis(&self, p: &Matrix<Rational>) -> Result<Self, ExtensionError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(ExtensionError::Shape { expected: n, rows: p.rows(), cols: p.cols() });
        }
        let p_inv = p.inverse()?;
        let to_new = |v: &[Rational]| -> Vec<Rational> {
            (0..n).map(|i| (0..n).fold(Rational::zero(), |acc, k| &acc + &(p_inv.get(i, k) * &v[k]))).collect()
        };
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| p.column(j)).collect();
        let table = (0..n).map(|i| (0..n).map(|j| to_new(&self.mul(&cols[i], &cols[j]))).collect()).collect();
        let names = (0..n).map(|i| format!("f{}", i + 1)).collect();
        Self::new(names, table, to_new(&self.unit))
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = zero_vec(self.dim());
        v[i] = Rational::one();
        v
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o = &*o + &(&c * t);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Rational], k: usize) -> Vec<Rational> {
        (0..k).fold(self.unit.clone(), |acc, _| self.mul(&acc, a))
    }

    /// Matrix of b ↦ a·b.
    pub fn mult_operator(&self, a: &[Rational]) -> Matrix<Rational> {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_fn(n, n, |i, j| cols[j][i].clone())
    }

    /// Line-oriented text form read by [`FinDimAlgebra::parse`].
    pub fn to_text(&self) -> String {
        let n = self.dim();
        let mut out = format!("dim {n}\nbasis {}\nunit {}\n", self.names.join(" "), join(&self.unit));
        for i in 0..n {
            for j in i..n {
                if !is_zero(&self.table[i][j]) {
                    writeln!(out, "{} * {} = {}", self.names[i], self.names[j], join(&self.table[i][j]))
                        .expect("write to string");
                }
            }
        }
        out
    }

    /// Reads `dim`, `basis`, `unit` and `a * b = c1 … cn` lines. Unlisted
    /// products are zero, except that products with a basis vector equal to
    /// the unit default to the other factor. Listing only one of a*b, b*a
    /// is enough.
    pub fn parse(text: &str) -> Result<Self, ExtensionError> {
        let mut dim: Option<usize> = None;
        let mut names: Option<Vec<String>> = None;
        let mut unit: Option<Vec<Rational>> = None;
        let mut products: Vec<(usize, String, String, Vec<Rational>)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let err = |msg: &str| ExtensionError::Parse { line: k + 1, msg: msg.to_string() };
            if line.is_empty() {
                continue;
            }
            let rationals = |s: &str| -> Result<Vec<Rational>, ExtensionError> {
                s.split_whitespace().map(|t| t.parse::<Rational>().map_err(|_| err("bad rational"))).collect()
            };
            if let Some(rest) = line.strip_prefix("dim ") {
                dim = Some(rest.trim().parse().map_err(|_| err("bad dimension"))?);
            } else if let Some(rest) = line.strip_prefix("basis ") {
                names = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if let Some(rest) = line.strip_prefix("unit ") {
                unit = Some(rationals(rest)?);
            } else if let Some((lhs, rhs)) = line.split_once('=') {
                let (a, b) = lhs.split_once('*').ok_or_else(|| err("expected a * b = ..."))?;
                products.push((k + 1, a.trim().to_string(), b.trim().to_string(), rationals(rhs)?));
            } else {
                return Err(err("unrecognized line"));
            }
        }
        let missing = |what: &str| ExtensionError::Parse { line: 0, msg: format!("missing {what} line") };
        let n = dim.ok_or_else(|| missing("dim"))?;
        let names = names.ok_or_else(|| missing("basis"))?;
        let unit = unit.ok_or_else(|| missing("unit"))?;
        if names.len() != n || unit.len() != n {
            return Err(ExtensionError::Parse { line: 0, msg: "basis and unit must have dim entries".into() });
        }
        let index = |name: &str, line: usize| {
            names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| ExtensionError::Parse { line, msg: format!("unknown basis element {name}") })
        };
        let mut table: Vec<Vec<Option<Vec<Rational>>>> = vec![vec![None; n]; n];
        for (line, a, b, v) in products {
            if v.len() != n {
                return Err(ExtensionError::Parse { line, msg: "product needs dim coefficients".into() });
            }
            let (i, j) = (index(&a, line)?, index(&b, line)?);
            if table[i][j].as_ref().is_some_and(|old| *old != v) {
                return Err(ExtensionError::BadAlgebra(format!("commutative: {a} * {b} given twice")));
            }
            table[i][j] = Some(v.clone());
            if table[j][i].is_none() {
                table[j][i] = Some(v);
            } else if table[j][i].as_ref() != Some(&v) {
                return Err(ExtensionError::BadAlgebra(format!("commutative: {a} * {b} != {b} * {a}")));
            }
        }
        let unit_index = {
            let nz: Vec<usize> = (0..n).filter(|&i| !unit[i].is_zero()).collect();
            (nz.len() == 1 && unit[nz[0]].is_one()).then(|| nz[0])
        };
        let mut full = vec![vec![zero_vec(n); n]; n];
        for i in 0..n {
            for j in 0..n {
                full[i][j] = match (&table[i][j], unit_index) {
                    (Some(v), _) => v.clone(),
                    (None, Some(u)) if u == i => {
                        let mut v = zero_vec(n);
                        v[j] = Rational::one();
                        v
                    }
                    (None, Some(u)) if u == j => {
                        let mut v = zero_vec(n);
                        v[i] = Rational::one();
                        v
                    }
                    _ => zero_vec(n),
                };
            }
        }
        Self::new(names, full, unit)
    }
}

fn join(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq)]
pub enum FactorKind {
    /// e_iB ≅ Q[ε]/(ε^order) with ε = `generator`.
    Principal { generator: Vec<Rational>, order: usize },
    /// dim m/m² > 1.
    NotPrincipal { cotangent_dim: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalFactor {
    pub idempotent: Vec<Rational>,
    pub dimension: usize,
    pub kind: FactorKind,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub radical_dim: usize,
    pub factors: Vec<LocalFactor>,
    /// Columns e_i ε_i^k, factor by factor; present when every factor is principal.
    pub change_of_basis: Option<Matrix<Rational>>,
    /// Multiplication in that basis agrees with ⊕ Q[ε_i]/(ε_i^{d_i}).
    pub round_trip: Option<bool>,
}

impl Decomposition {
    pub fn orders(&self) -> Vec<Option<usize>> {
        self.factors
            .iter()
            .map(|f| match f.kind {
                FactorKind::Principal { order, .. } => Some(order),
                FactorKind::NotPrincipal { .. } => None,
            })
            .collect()
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("radical dimension {}", self.radical_dim)];
        for (i, f) in self.factors.iter().enumerate() {
            out.push(match &f.kind {
                FactorKind::Principal { generator, order } => format!(
                    "factor {}: Q[e]/(e^{order}), dim {}, idempotent [{}], e = [{}]",
                    i + 1,
                    f.dimension,
                    join(&f.idempotent),
                    join(generator)
                ),
                FactorKind::NotPrincipal { cotangent_dim } => format!(
                    "factor {}: NOT-PRINCIPAL, dim {}, dim m/m^2 = {cotangent_dim}, idempotent [{}]",
                    i + 1,
                    f.dimension,
                    join(&f.idempotent)
                ),
            });
        }
        if let Some(ok) = self.round_trip {
            out.push(format!("round trip {}", if ok { "ok" } else { "MISMATCH" }));
        }
        out
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, ExtensionError> {
    let m =
        n.abs().to_u64().filter(|m| *m <= 1 << 40).ok_or_else(|| {
            ExtensionError::ResidueField(format!("coefficient {n} too large for rational root search"))
        })?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(BigInt::from(d));
            if d * d != m {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
}

/// Divide by (X - r); coefficients leading first.
fn deflate(coeffs: &[Rational], r: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(coeffs.len() - 1);
    let mut acc = Rational::zero();
    for c in &coeffs[..coeffs.len() - 1] {
        acc = &(&acc * r) + c;
        out.push(acc.clone());
    }
    out
}

/// Rational roots with multiplicity; the second value is the degree left over.
fn rational_roots(poly: &[Rational]) -> Result<(Vec<(Rational, usize)>, usize), ExtensionError> {
    let mut p = poly.to_vec();
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let mut zero_mult = 0;
    while p.len() > 1 && p.last().is_some_and(Rational::is_zero) {
        p.pop();
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if p.len() > 1 {
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c.numer() * &lcm) / c.denom()).collect();
        let lead = divisors(&ints[0])?;
        let tail = divisors(&ints[ints.len() - 1])?;
        let mut candidates: Vec<Rational> = Vec::new();
        for a in &tail {
            for b in &lead {
                let r = &Rational::from_bigint(a.clone()) / &Rational::from_bigint(b.clone());
                for c in [r.clone(), -r] {
                    if !candidates.contains(&c) {
                        candidates.push(c);
                    }
                }
            }
        }
        candidates.sort();
        for c in candidates {
            let mut mult = 0;
            while p.len() > 1 && horner(&p, &c).is_zero() {
                p = deflate(&p, &c);
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
    }
    Ok((roots, p.len() - 1))
}

/// Test elements: basis vectors, then fixed integer combinations.
fn candidates(n: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut v = zero_vec(n);
            v[i] = Rational::one();
            v
        })
        .collect();
    for m in 1..=6i64 {
        out.push(
            (0..n)
                .map(|k| Rational::from_int((k as i64 + 1).pow(m as u32 % 3 + 1) * if m > 3 { -1 } else { 1 } + m))
                .collect(),
        );
    }
    out
}

fn eval_poly(b: &FinDimAlgebra, roots: &[Rational], skip: usize, x: &[Rational]) -> Vec<Rational> {
    // ∏_{j≠skip} (x - λ_j)/(λ_skip - λ_j)
    let mut acc = b.unit().to_vec();
    for (j, l) in roots.iter().enumerate() {
        if j == skip {
            continue;
        }
        let denom = (&roots[skip] - l).recip().expect("distinct roots");
        let factor = scale(&add(x, &scale(b.unit(), &-l)), &denom);
        acc = b.mul(&acc, &factor);
    }
    acc
}

fn lift_idempotent(b: &FinDimAlgebra, mut e: Vec<Rational>) -> Result<Vec<Rational>, ExtensionError> {
    let three = Rational::from_int(3);
    let minus_two = Rational::from_int(-2);
    for _ in 0..=b.dim() + 1 {
        let e2 = b.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = b.mul(&e2, &e);
        e = add(&scale(&e2, &three), &scale(&e3, &minus_two));
    }
    Err(ExtensionError::IdempotentLifting("Newton iteration did not stabilize".into()))
}

/// Split B into local factors e_iB and classify each one.
pub fn decompose_algebra(b: &FinDimAlgebra) -> Result<Decomposition, ExtensionError> {
    let n = b.dim();
    let ops: Vec<Matrix<Rational>> = (0..n).map(|i| b.mult_operator(&b.basis_vector(i))).collect();
    let gram = Matrix::from_fn(n, n, |i, j| (&ops[i] * &ops[j]).trace());
    let radical = rref(&gram)?.nullspace;
    let r = n - radical.len();

    let mut chosen = None;
    let mut last = String::new();
    for x in candidates(n) {
        let chi = b.mult_operator(&x).charpoly()?;
        let (roots, leftover) = rational_roots(&chi)?;
        if leftover > 0 {
            last = format!(
                "characteristic polynomial of L_x has an irreducible factor of degree > 1 (x = [{}])",
                join(&x)
            );
            continue;
        }
        if roots.len() != r {
            last = format!("eigenvalues collide for x = [{}]", join(&x));
            continue;
        }
        chosen = Some((x, roots.into_iter().map(|(l, _)| l).collect::<Vec<_>>()));
        break;
    }
    let (x, roots) = chosen.ok_or(ExtensionError::ResidueField(last))?;

    let mut idempotents = Vec::with_capacity(r);
    for i in 0..r {
        idempotents.push(lift_idempotent(b, eval_poly(b, &roots, i, &x))?);
    }
    let total = idempotents.iter().fold(zero_vec(n), |acc, e| add(&acc, e));
    if total != b.unit() {
        return Err(ExtensionError::IdempotentLifting("idempotents do not sum to 1".into()));
    }
    for i in 0..r {
        for j in i + 1..r {
            if !is_zero(&b.mul(&idempotents[i], &idempotents[j])) {
                return Err(ExtensionError::IdempotentLifting("idempotents are not orthogonal".into()));
            }
        }
    }

    let mut factors = Vec::with_capacity(r);
    for e in idempotents {
        let bi = span(&(0..n).map(|k| b.mul(&e, &b.basis_vector(k))).collect::<Vec<_>>(), n);
        let m = span(&radical.iter().map(|j| b.mul(&e, j)).collect::<Vec<_>>(), n);
        let mut products = Vec::new();
        for u in &m {
            for v in &m {
                products.push(b.mul(u, v));
            }
        }
        let m2 = span(&products, n);
        let cot = m.len() - m2.len();
        let kind = if cot == 0 {
            FactorKind::Principal { generator: zero_vec(n), order: 1 }
        } else if cot == 1 {
            let eps = m.iter().find(|v| !in_span(&m2, v)).expect("m strictly contains m^2").clone();
            let mut order = 1;
            let mut power = eps.clone();
            while !is_zero(&power) {
                power = b.mul(&power, &eps);
                order += 1;
                if order > n + 1 {
                    return Err(ExtensionError::BadAlgebra("nilpotent on the radical".into()));
                }
            }
            if order != bi.len() {
                return Err(ExtensionError::BadAlgebra(format!(
                    "consistent: local factor of dimension {} with generator of order {order}",
                    bi.len()
                )));
            }
            FactorKind::Principal { generator: eps, order }
        } else {
            FactorKind::NotPrincipal { cotangent_dim: cot }
        };
        factors.push(LocalFactor { idempotent: e, dimension: bi.len(), kind });
    }

    let (change_of_basis, round_trip) = match round_trip(b, &factors)? {
        Some((p, ok)) => (Some(p), Some(ok)),
        None => (None, None),
    };
    Ok(Decomposition { radical_dim: radical.len(), factors, change_of_basis, round_trip })
}

fn round_trip(b: &FinDimAlgebra, factors: &[LocalFactor]) -> Result<Option<(Matrix<Rational>, bool)>, ExtensionError> {
    let mut orders = Vec::new();
    let mut cols = Vec::new();
    let mut labels = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let FactorKind::Principal { generator, order } = &f.kind else {
            return Ok(None);
        };
        orders.push(*order);
        let mut power = f.idempotent.clone();
        for k in 0..*order {
            cols.push(power.clone());
            labels.push((i, k));
            power = b.mul(&power, generator);
        }
    }
    let n = b.dim();
    if cols.len() != n {
        return Ok(Some((Matrix::identity(n, &Rational::one()), false)));
    }
    let p = Matrix::from_fn(n, n, |i, j| cols[j][i].clone());
    if rank_of(&cols)? != n {
        return Ok(Some((p, false)));
    }
    let model = SumAlgebra::from_orders(&orders).map_err(|e| ExtensionError::BadAlgebra(e.to_string()))?;
    let one = Rational::one();
    let model_basis = |(i, k): (usize, usize)| -> SumElement<Rational> {
        let parts = orders
            .iter()
            .enumerate()
            .map(
                |(f, &d)| {
                    if f == i {
                        Trunc::epsilon(d, &one).pow(k as u32)
                    } else {
                        Trunc::constant(d, Rational::zero())
                    }
                },
            )
            .collect();
        model.element(parts).expect("orders match")
    };
    let flatten =
        |s: &SumElement<Rational>| -> Vec<Rational> { s.parts().iter().flat_map(|t| t.coeffs().to_vec()).collect() };
    let mut ok = true;
    for (a, &la) in labels.iter().enumerate() {
        for (c, &lc) in labels.iter().enumerate().skip(a) {
            let coords = flatten(&model_basis(la).mul(&model_basis(lc)));
            let expected = (0..n).fold(zero_vec(n), |acc, j| add(&acc, &scale(&cols[j], &coords[j])));
            if b.mul(&cols[a], &cols[c]) != expected {
                ok = false;
            }
        }
    }
    Ok(Some((p, ok)))
}
