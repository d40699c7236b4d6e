//! The group V = 𝔤 ⊕ 𝔤 ⊕ K over 𝔤 = sl_n, twisted by a bilinear form on 𝔤.

use std::sync::Arc;

use crate::kernel::{Matrix, Rational, Ring};

use super::groups::{AdditiveMatrices, CocycleExtension, ExtElem, Group, ProductGroup};
use super::ExtensionError;

/// Basis of sl_n: E_ij (i ≠ j, row-major) then H_k = E_kk - E_{k+1,k+1}.
pub fn sl_basis(n: usize) -> Vec<Matrix<Rational>> {
    let zero = Rational::zero();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Matrix::zeros(n, n, &zero);
                m.set(i, j, Rational::one());
                out.push(m);
            }
        }
    }
    for k in 0..n.saturating_sub(1) {
        let mut m = Matrix::zeros(n, n, &zero);
        m.set(k, k, Rational::one());
        m.set(k + 1, k + 1, Rational::from_int(-1));
        out.push(m);
    }
    out
}

/// Coordinates of a trace-zero matrix in [`sl_basis`].
fn sl_coords(x: &Matrix<Rational>) -> Vec<Rational> {
    let n = x.rows();
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(x.get(i, j).clone());
            }
        }
    }
    let mut acc = Rational::zero();
    for k in 0..n - 1 {
        acc = &acc + x.get(k, k);
        out.push(acc.clone());
    }
    out
}

fn check_sl(n: usize, x: &Matrix<Rational>) -> Result<(), ExtensionError> {
    if x.rows() != n || x.cols() != n {
        return Err(ExtensionError::Shape { expected: n, rows: x.rows(), cols: x.cols() });
    }
    if !x.trace().is_zero() {
        return Err(ExtensionError::NotTraceZero(x.to_string()));
    }
    Ok(())
}

fn ad_matrix(x: &Matrix<Rational>, basis: &[Matrix<Rational>]) -> Matrix<Rational> {
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| sl_coords(&(&(x * b) - &(b * x)))).collect();
    let d = basis.len();
    Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
}

/// tr(ad x ∘ ad y) on sl_n.
pub fn killing_form(n: usize, x: &Matrix<Rational>, y: &Matrix<Rational>) -> Result<Rational, ExtensionError> {
    if n < 2 {
        return Err(ExtensionError::Shape { expected: n, rows: n, cols: n });
    }
    check_sl(n, x)?;
    check_sl(n, y)?;
    let basis = sl_basis(n);
    Ok((&ad_matrix(x, &basis) * &ad_matrix(y, &basis)).trace())
}

/// A symmetric bilinear form on sl_n, stored by its Gram matrix on [`sl_basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    n: usize,
    gram: Matrix<Rational>,
}

impl BilinearForm {
    pub fn killing(n: usize) -> Self {
        let basis = sl_basis(n);
        let ads: Vec<_> = basis.iter().map(|b| ad_matrix(b, &basis)).collect();
        let d = basis.len();
        let gram = Matrix::from_fn(d, d, |i, j| (&ads[i] * &ads[j]).trace());
        BilinearForm { n, gram }
    }

    pub fn zero(n: usize) -> Self {
        let d = n * n - 1;
        BilinearForm { n, gram: Matrix::zeros(d, d, &Rational::zero()) }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.gram.is_zero()
    }

    pub fn eval(&self, x: &Matrix<Rational>, y: &Matrix<Rational>) -> Rational {
        let (cx, cy) = (sl_coords(x), sl_coords(y));
        let mut acc = Rational::zero();
        for (i, a) in cx.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in cy.iter().enumerate() {
                let g = self.gram.get(i, j);
                if !b.is_zero() && !g.is_zero() {
                    acc = &acc + &(&(a * b) * g);
                }
            }
        }
        acc
    }
}

pub type PairBase = ProductGroup<AdditiveMatrices, AdditiveMatrices>;
pub type HeisenbergElem = ExtElem<(Matrix<Rational>, Matrix<Rational>)>;

/// (a₁,b₁,c₁)(a₂,b₂,c₂) = (a₁+a₂, b₁+b₂, c₁+c₂+f(a₁,b₂)-f(a₂,b₁)).
#[derive(Clone)]
pub struct HeisenbergLikeGroup {
    form: Arc<BilinearForm>,
    ext: CocycleExtension<PairBase>,
}

impl HeisenbergLikeGroup {
    pub fn new(form: BilinearForm) -> Self {
        let n = form.size();
        let form = Arc::new(form);
        let f = form.clone();
        let base = ProductGroup::new(AdditiveMatrices::new(n), AdditiveMatrices::new(n));
        let ext = CocycleExtension::new(
            base,
            1,
            Arc::new(move |g1: &(Matrix<Rational>, Matrix<Rational>), g2: &(Matrix<Rational>, Matrix<Rational>)| {
                vec![&f.eval(&g1.0, &g2.1) - &f.eval(&g2.0, &g1.1)]
            }),
        );
        HeisenbergLikeGroup { form, ext }
    }

    /// sl_n with its Killing form.
    pub fn killing(n: usize) -> Self {
        Self::new(BilinearForm::killing(n))
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn size(&self) -> usize {
        self.form.size()
    }

    /// The same group seen as a central extension of 𝔤 ⊕ 𝔤.
    pub fn as_extension(&self) -> &CocycleExtension<PairBase> {
        &self.ext
    }

    pub fn element(
        &self,
        a: Matrix<Rational>,
        b: Matrix<Rational>,
        c: Rational,
    ) -> Result<HeisenbergElem, ExtensionError> {
        check_sl(self.size(), &a)?;
        check_sl(self.size(), &b)?;
        Ok(self.ext.element((a, b), vec![c]))
    }

    pub fn zero_matrix(&self) -> Matrix<Rational> {
        Matrix::zeros(self.size(), self.size(), &Rational::zero())
    }
}

impl Group for HeisenbergLikeGroup {
    type Elem = HeisenbergElem;

    fn identity(&self) -> HeisenbergElem {
        self.ext.identity()
    }
    fn mul(&self, a: &HeisenbergElem, b: &HeisenbergElem) -> HeisenbergElem {
        self.ext.mul(a, b)
    }
    fn inv(&self, a: &HeisenbergElem) -> HeisenbergElem {
        ExtElem { g: (a.g.0.neg(), a.g.1.neg()), z: vec![-&a.z[0]] }
    }
}

/// [v₁, v₂], which equals (0, 0, 2(f(a₁,b₂) - f(a₂,b₁))).
pub fn heisenberg_commutator(v: &HeisenbergLikeGroup, v1: &HeisenbergElem, v2: &HeisenbergElem) -> HeisenbergElem {
    v.commutator(v1, v2)
}

#[derive(Clone, Debug, PartialEq)]
pub enum SplitnessVerdict {
    /// A noncentral commutator: V is nonabelian, so V ≇ K × (𝔤 ⊕ 𝔤).
    NonSplit { witness: (HeisenbergElem, HeisenbergElem), commutator: HeisenbergElem },
    /// Every basis commutator vanishes; `section_is_homomorphism` records
    /// whether (a, b) ↦ (a, b, 0) is a splitting on all basis pairs.
    Inconclusive { section_is_homomorphism: bool },
}

impl SplitnessVerdict {
    pub fn is_non_split(&self) -> bool {
        matches!(self, SplitnessVerdict::NonSplit { .. })
    }
}

/// Sweep basis pairs (a, 0, 0), (0, b, 0) for a nontrivial commutator.
pub fn splitness_verdict(v: &HeisenbergLikeGroup) -> SplitnessVerdict {
    let basis = sl_basis(v.size());
    let zero = v.zero_matrix();
    let q0 = Rational::zero();
    for a in &basis {
        for b in &basis {
            let v1 = v.ext.element((a.clone(), zero.clone()), vec![q0.clone()]);
            let v2 = v.ext.element((zero.clone(), b.clone()), vec![q0.clone()]);
            let c = heisenberg_commutator(v, &v1, &v2);
            if !v.is_identity(&c) {
                return SplitnessVerdict::NonSplit { witness: (v1, v2), commutator: c };
            }
        }
    }
    let mut lifts = Vec::new();
    for a in &basis {
        lifts.push((a.clone(), zero.clone()));
        lifts.push((zero.clone(), a.clone()));
    }
    let section = |g: &(Matrix<Rational>, Matrix<Rational>)| v.ext.lift(g);
    let base = v.ext.base();
    let ok = lifts.iter().all(|x| lifts.iter().all(|y| section(&base.mul(x, y)) == v.mul(&section(x), &section(y))));
    SplitnessVerdict::Inconclusive { section_is_homomorphism: ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn unit(n: usize, i: usize, j: usize) -> Matrix<Rational> {
        let mut m = Matrix::zeros(n, n, &q(0));
        m.set(i, j, q(1));
        m
    }

    #[test]
    fn killing_form_of_sl2() {
        assert_eq!(killing_form(2, &unit(2, 0, 1), &unit(2, 1, 0)).unwrap(), q(4));
        let h = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(-1)]]).unwrap();
        assert_eq!(killing_form(2, &h, &h).unwrap(), q(8));
        assert!(matches!(killing_form(2, &unit(2, 0, 0), &h), Err(ExtensionError::NotTraceZero(_))));
    }

    #[test]
    fn gram_matches_direct_killing_form() {
        for n in [2, 3] {
            let f = BilinearForm::killing(n);
            let basis = sl_basis(n);
            let x = &basis[0] + &(&basis[basis.len() - 1] + &basis[1]);
            let y = &basis[2] - &basis[basis.len() - 1];
            assert_eq!(f.eval(&x, &y), killing_form(n, &x, &y).unwrap());
            // f = 2n tr(xy) on sl_n
            assert_eq!(f.eval(&x, &y), &(&x * &y).trace() * &q(2 * n as i64));
        }
    }

    #[test]
    fn worked_commutator() {
        let v = HeisenbergLikeGroup::killing(2);
        let z = v.zero_matrix();
        let v1 = v.element(unit(2, 0, 1), z.clone(), q(0)).unwrap();
        let v2 = v.element(z.clone(), unit(2, 1, 0), q(0)).unwrap();
        let c = heisenberg_commutator(&v, &v1, &v2);
        assert_eq!(c, v.element(z.clone(), z, q(8)).unwrap());
        assert!(v.is_identity(&heisenberg_commutator(&v, &v1, &v1)));
    }

    #[test]
    fn verdicts() {
        let sl2 = splitness_verdict(&HeisenbergLikeGroup::killing(2));
        match &sl2 {
            SplitnessVerdict::NonSplit { witness, commutator } => {
                assert_eq!(witness.0.g.0, unit(2, 0, 1));
                assert_eq!(witness.1.g.1, unit(2, 1, 0));
                assert_eq!(commutator.z, vec![q(8)]);
            }
            other => panic!("{other:?}"),
        }
        assert!(splitness_verdict(&HeisenbergLikeGroup::killing(3)).is_non_split());
        assert_eq!(
            splitness_verdict(&HeisenbergLikeGroup::new(BilinearForm::zero(2))),
            SplitnessVerdict::Inconclusive { section_is_homomorphism: true }
        );
    }
}
