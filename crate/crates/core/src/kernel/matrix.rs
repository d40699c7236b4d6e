//! Dense matrices over any [`Ring`], with exact elimination over fields.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{Field, KernelError, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

/// Output of [`rref`].
#[derive(Clone, Debug)]
pub struct Rref<F: Ring> {
    pub reduced: Matrix<F>,
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
    /// Basis of the right null space, one vector per free column.
    pub nullspace: Vec<Vec<F>>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize, like: &R) -> Self {
        Matrix { rows, cols, entries: vec![like.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, like: &R) -> Self {
        let mut m = Self::zeros(n, n, like);
        for i in 0..n {
            m.entries[i * n + i] = like.one_like();
        }
        m
    }

    /// Build from row vectors. Rejects ragged input, empty input and
    /// entries from different domains.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, KernelError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(KernelError::EmptyMatrix);
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(KernelError::DimensionMismatch(format!("ragged rows in {nrows}x{ncols} matrix")));
        }
        let entries: Vec<R> = rows.into_iter().flatten().collect();
        check_domain(&entries)?;
        Ok(Matrix { rows: nrows, cols: ncols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// A representative entry, for producing constants in the same domain.
    pub fn sample(&self) -> &R {
        &self.entries[0]
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> R {
        let mut acc = self.sample().zero_like();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| c.mul(e))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    fn check_same_domain(&self, other: &Self) -> Result<(), KernelError> {
        if self.sample().same_domain(other.sample()) {
            Ok(())
        } else {
            Err(KernelError::DomainMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, KernelError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(KernelError::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.check_same_domain(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, KernelError> {
        self.try_add(&other.neg())
    }

    /// Exact matrix product.
    pub fn matmul(&self, other: &Self) -> Result<Self, KernelError> {
        if self.cols != other.rows {
            return Err(KernelError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.check_same_domain(other)?;
        let zero = self.sample().zero_like();
        let mut out = Matrix::zeros(self.rows, other.cols, &zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Coefficients of det(xI - M), leading coefficient first, by the
    /// division-free Berkowitz recursion.
    pub fn charpoly(&self) -> Result<Vec<R>, KernelError> {
        if !self.is_square() {
            return Err(KernelError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let one = self.sample().one_like();
        let mut vect = vec![one.clone(), self.get(0, 0).neg()];
        for r in 1..n {
            let a = self.get(r, r);
            // q = [1, -a, -R C, -R S C, ..., -R S^{r-1} C]
            let mut q = Vec::with_capacity(r + 2);
            q.push(one.clone());
            q.push(a.neg());
            let mut sc: Vec<R> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let mut dot = one.zero_like();
                for (j, c) in sc.iter().enumerate() {
                    dot = dot.add(&self.get(r, j).mul(c));
                }
                q.push(dot.neg());
                let next: Vec<R> = (0..r)
                    .map(|i| {
                        let mut acc = one.zero_like();
                        for (j, c) in sc.iter().enumerate() {
                            acc = acc.add(&self.get(i, j).mul(c));
                        }
                        acc
                    })
                    .collect();
                sc = next;
            }
            let mut next = vec![one.zero_like(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, v) in vect.iter().enumerate().take(i + 1) {
                    *slot = slot.add(&q[i - j].mul(v));
                }
            }
            vect = next;
        }
        Ok(vect)
    }

    pub fn det(&self) -> Result<R, KernelError> {
        let cp = self.charpoly()?;
        let last = cp[self.rows].clone();
        Ok(if self.rows % 2 == 0 { last } else { last.neg() })
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        Matrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let ii = if i >= skip_row { i + 1 } else { i };
            let jj = if j >= skip_col { j + 1 } else { j };
            self.get(ii, jj).clone()
        })
    }

    /// Inverse over the entry ring. Fails with the determinant when the
    /// determinant is not a unit.
    pub fn inverse(&self) -> Result<Self, KernelError> {
        if !self.is_square() {
            return Err(KernelError::NotSquare(self.rows, self.cols));
        }
        if let Some(inv) = self.unit_pivot_inverse() {
            return Ok(inv);
        }
        let det = self.det()?;
        let det_inv = det.try_inv().ok_or_else(|| KernelError::Singular { determinant: det.to_string() })?;
        let n = self.rows;
        if n == 1 {
            return Ok(Matrix::from_fn(1, 1, |_, _| det_inv.clone()));
        }
        let mut adj = Matrix::zeros(n, n, self.sample());
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det()?;
                let c = if (i + j) % 2 == 0 { c } else { c.neg() };
                adj.set(j, i, c.mul(&det_inv));
            }
        }
        Ok(adj)
    }

    /// Gauss-Jordan elimination that only pivots on units; `None` if some
    /// column offers no unit pivot.
    fn unit_pivot_inverse(&self) -> Option<Self> {
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n, self.sample());
        for col in 0..n {
            let (prow, pinv) = (col..n).find_map(|r| a.get(r, col).try_inv().map(|iv| (r, iv)))?;
            if prow != col {
                a.swap_rows(prow, col);
                inv.swap_rows(prow, col);
            }
            a.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                a.add_row_multiple(r, col, &factor.neg());
                inv.add_row_multiple(r, col, &factor.neg());
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &R) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.entries[idx] = self.entries[idx].mul(c);
        }
    }

    /// row[target] += c * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, c: &R) {
        for j in 0..self.cols {
            let s = &self.entries[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let delta = s.mul(c);
            let idx = target * self.cols + j;
            self.entries[idx] = self.entries[idx].add(&delta);
        }
    }
}

fn check_domain<R: Ring>(entries: &[R]) -> Result<(), KernelError> {
    match entries.split_first() {
        Some((first, rest)) if rest.iter().any(|e| !first.same_domain(e)) => Err(KernelError::DomainMismatch),
        _ => Ok(()),
    }
}

/// Reduced row echelon form, rank and right null-space basis.
pub fn rref<F: Field>(m: &Matrix<F>) -> Result<Rref<F>, KernelError> {
    check_domain(&m.entries)?;
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(p, row);
        let inv = a.get(row, col).try_inv().expect("nonzero field element is invertible");
        a.scale_row(row, &inv);
        for r in 0..a.rows {
            if r != row && !a.get(r, col).is_zero() {
                let factor = a.get(r, col).neg();
                a.add_row_multiple(r, row, &factor);
            }
        }
        pivots.push(col);
        row += 1;
    }
    let zero = m.sample().zero_like();
    let one = m.sample().one_like();
    let nullspace = (0..a.cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![zero.clone(); a.cols];
            v[free] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = a.get(r, free).neg();
            }
            v
        })
        .collect();
    Ok(Rref { rank: pivots.len(), reduced: a, pivots, nullspace })
}

/// Rank of a list of vectors (as rows).
pub fn rank_of<F: Field>(vectors: &[Vec<F>]) -> Result<usize, KernelError> {
    if vectors.is_empty() || vectors[0].is_empty() {
        return Ok(0);
    }
    Ok(rref(&Matrix::from_rows(vectors.to_vec())?)?.rank)
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;

    /// Panics on shape or domain mismatch; use [`Matrix::matmul`] for a `Result`.
    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.matmul(rhs).expect("matrix product")
    }
}

impl<R: Ring> Add for &Matrix<R> {
    type Output = Matrix<R>;
    fn add(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl<R: Ring> Sub for &Matrix<R> {
    type Output = Matrix<R>;
    fn sub(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.try_sub(rhs).expect("matrix difference")
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{MultiPoly, NumberField, NumberFieldElement, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rref_identity_has_trivial_nullspace() {
        let r = rref(&qm(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(r.rank, 2);
        assert!(r.nullspace.is_empty());
    }

    #[test]
    fn rref_single_row() {
        let r = rref(&qm(&[&[3, -2]])).unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.nullspace.len(), 1);
        // span{(2,3)}: the returned vector is (2/3, 1)
        let v = &r.nullspace[0];
        assert_eq!(&v[0] * &q(3), &v[1] * &q(2));
        assert_eq!(v[1], q(1));
    }

    #[test]
    fn rref_zero_matrix() {
        let r = rref(&Matrix::zeros(2, 3, &q(0))).unwrap();
        assert_eq!(r.rank, 0);
        assert_eq!(r.nullspace.len(), 3);
    }

    #[test]
    fn rref_over_number_field() {
        let k = NumberField::quadratic("w", 2);
        let w = NumberFieldElement::generator(&k);
        let one = w.one_like();
        // [[w, 2], [1, w]] has determinant w^2 - 2 = 0.
        let m = Matrix::from_rows(vec![vec![w.clone(), one.from_int_like(2)], vec![one, w]]).unwrap();
        let r = rref(&m).unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.nullspace.len(), 1);
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn mixed_domains_are_rejected() {
        let k2 = NumberField::quadratic("w", 2);
        let k3 = NumberField::quadratic("w", 3);
        let a = NumberFieldElement::generator(&k2);
        let b = NumberFieldElement::generator(&k3);
        assert!(matches!(Matrix::from_rows(vec![vec![a, b]]), Err(KernelError::DomainMismatch)));
    }

    #[test]
    fn inverse_of_identity() {
        let id = Matrix::identity(3, &q(1));
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn inverse_of_polynomial_unipotent() {
        let vars = MultiPoly::variables(&["s"]);
        let s = MultiPoly::var(&vars, "s").unwrap();
        let m = Matrix::from_rows(vec![vec![s.one_like(), s.clone()], vec![s.zero_like(), s.one_like()]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(inv.get(0, 1), &s.neg());
        assert!((&m * &inv).is_identity());
    }

    #[test]
    fn singular_rational_matrix_reports_determinant() {
        match qm(&[&[1, 2], &[2, 4]]).inverse() {
            Err(KernelError::Singular { determinant }) => assert_eq!(determinant, "0"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn charpoly_and_det_of_3x3() {
        let m = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        // det = 2(12-1) - 1(4-0) = 18
        assert_eq!(m.det().unwrap(), q(18));
        let cp = m.charpoly().unwrap();
        assert_eq!(cp[0], q(1));
        assert_eq!(cp[1], q(-9));
    }
}
