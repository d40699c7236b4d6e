//! Generation of the unit group of K[ε]/(ε^d) by elements 1 - ux.
//!
//! For x with x₁ ≠ 0 put δ = x - x₀. Then 1 - ux = (1 - ux₀)(1 + vδ) with
//! v = -u/(1 - ux₀), and every element of 1 + εK[ε] is a product
//! (1 + u₁δ)⋯(1 + u_{d-1}δ): expanding the product gives 1 + Σ s_k δ^k with
//! s_k the elementary symmetric functions of the u_i, so a target
//! 1 + Σ s_k δ^k is reached by the roots of z^{d-1} - s₁z^{d-2} + … ± s_{d-1}.
//! The roots are left implicit; the witness is that monic polynomial.

use crate::kernel::{Field, MultiPoly, Rational, Ring};

use super::{RingError, Trunc};

/// Monic polynomial whose roots u₁..u_{d-1} satisfy ∏(1 + u_iδ) = target.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitWitness<F: Ring> {
    /// δ = x - x₀.
    pub delta: Trunc<F>,
    /// s₁, …, s_{d-1}: target = 1 + Σ s_k δ^k.
    pub elementary: Vec<F>,
    /// Coefficients of z^{d-1}, z^{d-2}, …, z⁰ (leading 1 first).
    pub polynomial: Vec<F>,
}

impl UnitWitness<Rational> {
    /// The witness as a univariate polynomial in `z`.
    pub fn polynomial_in_z(&self) -> MultiPoly {
        let vars = MultiPoly::variables(&["z"]);
        let z = MultiPoly::var(&vars, "z").expect("declared");
        let n = self.polynomial.len() - 1;
        let mut acc = MultiPoly::zero(&vars);
        for (k, c) in self.polynomial.iter().enumerate() {
            acc = acc.add(&z.pow((n - k) as u32).scale(c));
        }
        acc
    }
}

/// Solve target = 1 + Σ s_k δ^k for the s_k and return the Vieta polynomial.
pub fn unit_group_witness<F: Field>(x: &Trunc<F>, target: &Trunc<F>) -> Result<UnitWitness<F>, RingError> {
    let d = x.order();
    if target.order() != d {
        return Err(RingError::OrderMismatch(d, target.order()));
    }
    if x.residue().is_zero() {
        return Err(RingError::NotAUnit(x.to_string()));
    }
    if d < 2 || x.coeff(1).is_zero() {
        return Err(RingError::LinearCoefficientZero(x.to_string()));
    }
    if !target.residue().is_one() {
        return Err(RingError::NotPrincipalUnit(target.to_string()));
    }
    let delta = x.tail();
    let x1 = x.coeff(1).clone();
    let mut residual = target.sub(&target.one_like());
    let mut elementary = Vec::with_capacity(d - 1);
    let mut delta_pow = delta.clone();
    let mut x1_pow = x1.clone();
    for k in 1..d {
        // δ^k = x₁^k ε^k + higher terms, so the ε^k coefficient fixes s_k.
        let s_k = residual.coeff(k).div(&x1_pow).expect("x1 is nonzero");
        residual = residual.sub(&delta_pow.map(|c| c.mul(&s_k)));
        elementary.push(s_k);
        delta_pow = delta_pow.mul(&delta);
        x1_pow = x1_pow.mul(&x1);
    }
    debug_assert!(residual.is_zero());
    let one = x1.one_like();
    let mut polynomial = vec![one];
    for (k, s) in elementary.iter().enumerate() {
        polynomial.push(if k % 2 == 0 { s.neg() } else { s.clone() });
    }
    Ok(UnitWitness { delta, elementary, polynomial })
}

/// Outcome of the two-part symbolic check of a [`UnitWitness`].
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessCheck {
    /// ∏(1 + u_iδ) = 1 + Σ e_k(u)δ^k with the u_i formal.
    pub product_identity: bool,
    /// 1 + Σ s_kδ^k, with s_k read off the polynomial by Vieta, equals the target.
    pub reproduces_target: bool,
}

impl WitnessCheck {
    pub fn passed(&self) -> bool {
        self.product_identity && self.reproduces_target
    }
}

/// e_k(u₁..u_n) for k = 0..=n, built by summing over k-subsets.
pub fn elementary_symmetric(u: &[MultiPoly]) -> Vec<MultiPoly> {
    let n = u.len();
    let one = u.first().expect("at least one variable").one_like();
    let mut out = vec![one.zero_like(); n + 1];
    for mask in 0u32..(1u32 << n) {
        let mut term = one.clone();
        for (i, ui) in u.iter().enumerate() {
            if mask & (1 << i) != 0 {
                term = term.mul(ui);
            }
        }
        let k = mask.count_ones() as usize;
        out[k] = out[k].add(&term);
    }
    out
}

/// Symbolic verification over the rationals with formal roots u₁..u_{d-1}.
pub fn verify_unit_witness(witness: &UnitWitness<Rational>, target: &Trunc<Rational>) -> WitnessCheck {
    let d = witness.delta.order();
    let names: Vec<String> = (1..d).map(|i| format!("u{i}")).collect();
    let vars = MultiPoly::variables(&names);
    let u: Vec<MultiPoly> = names.iter().map(|n| MultiPoly::var(&vars, n).expect("declared")).collect();
    let delta = witness.delta.lift(&vars);
    let one = delta.one_like();

    let mut product = one.clone();
    for ui in &u {
        product = product.mul(&one.add(&delta.map(|c| c.mul(ui))));
    }
    let e = elementary_symmetric(&u);
    let mut expected = one.clone();
    let mut delta_pow = one.clone();
    for ek in e.iter().skip(1) {
        delta_pow = delta_pow.mul(&delta);
        expected = expected.add(&delta_pow.map(|c| c.mul(ek)));
    }
    let product_identity = product == expected;

    // Vieta: coefficient of z^{d-1-k} is (-1)^k s_k.
    let mut rebuilt = target.one_like();
    let mut dp = target.one_like();
    for (k, c) in witness.polynomial.iter().enumerate().skip(1) {
        let s_k = if k % 2 == 1 { c.neg() } else { c.clone() };
        dp = dp.mul(&witness.delta);
        rebuilt = rebuilt.add(&dp.map(|x| x.mul(&s_k)));
    }
    WitnessCheck { product_identity, reproduces_target: rebuilt == *target }
}

/// 1 - ux = (1 - ux₀)(1 + vδ) with v = -u/(1 - ux₀).
#[derive(Clone, Debug, PartialEq)]
pub struct OneMinusUx<F: Ring> {
    pub scalar: F,
    pub unipotent: Trunc<F>,
    pub v: F,
}

impl<F: Field> OneMinusUx<F> {
    /// scalar · unipotent.
    pub fn recompose(&self) -> Trunc<F> {
        self.unipotent.map(|c| c.mul(&self.scalar))
    }
}

pub fn factor_one_minus_ux<F: Field>(x: &Trunc<F>, u: &F) -> Result<OneMinusUx<F>, RingError> {
    if x.residue().is_zero() {
        return Err(RingError::NotAUnit(x.to_string()));
    }
    let scalar = u.one_like().sub(&u.mul(x.residue()));
    let scalar_inv = scalar.inv().ok_or_else(|| RingError::DegenerateScalar(u.to_string()))?;
    let v = u.neg().mul(&scalar_inv);
    let delta = x.tail();
    let unipotent = delta.one_like().add(&delta.map(|c| c.mul(&v)));
    Ok(OneMinusUx { scalar, unipotent, v })
}
