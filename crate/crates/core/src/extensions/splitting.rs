//! Commutators of lifts, and sections over a product of two groups.

use super::groups::{CocycleExtension, ExtElem, Group, ProductGroup};
use super::ExtensionError;

#[derive(Clone, Debug, PartialEq)]
pub struct LiftReport<E> {
    pub first: ExtElem<E>,
    pub second: ExtElem<E>,
    pub equal: bool,
}

/// Compare [g̃₁, h̃₁] with [g̃₂, h̃₂] for two choices of lifts of g and h.
pub fn commutator_lift_invariance<G: Group>(
    ext: &CocycleExtension<G>,
    g: &G::Elem,
    h: &G::Elem,
    lifts: [(ExtElem<G::Elem>, ExtElem<G::Elem>); 2],
) -> Result<LiftReport<G::Elem>, ExtensionError> {
    for (lg, lh) in &lifts {
        if ext.project(lg) != *g || ext.project(lh) != *h {
            return Err(ExtensionError::BadLift);
        }
    }
    let [(g1, h1), (g2, h2)] = lifts;
    let first = ext.commutator(&g1, &h1);
    let second = ext.commutator(&g2, &h2);
    let equal = first == second;
    Ok(LiftReport { first, second, equal })
}

/// ψ_{g₁}(g₂) = [φ₁(g₁), φ₂(g₂)] on the sampled grid.
#[derive(Clone, Debug, PartialEq)]
pub struct Obstruction {
    pub nontrivial: bool,
    /// ψ_{g₁}(g₂g₂') = ψ_{g₁}(g₂)ψ_{g₁}(g₂') on consecutive samples.
    pub homomorphic_in_second: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SplittingReport {
    /// φ(g₁,g₂) = φ₁(g₁)φ₂(g₂) is multiplicative on the sampled pairs.
    pub homomorphism_holds: bool,
    pub failure: Option<String>,
    pub obstruction: Obstruction,
}

type Pair<G1, G2> = (<G1 as Group>::Elem, <G2 as Group>::Elem);

fn check_section<G: Group, E: Group>(
    group: &G,
    ext: &E,
    phi: &dyn Fn(&G::Elem) -> E::Elem,
    is_lift: &dyn Fn(&G::Elem, &E::Elem) -> bool,
    samples: &[G::Elem],
    side: &str,
) -> Result<(), ExtensionError> {
    for (k, g) in samples.iter().enumerate() {
        if !is_lift(g, &phi(g)) {
            return Err(ExtensionError::NotASection(format!("{side} section does not lift sample {k}")));
        }
        if let Some(h) = samples.get(k + 1) {
            if phi(&group.mul(g, h)) != ext.mul(&phi(g), &phi(h)) {
                return Err(ExtensionError::NotASection(format!("{side} section is not multiplicative at sample {k}")));
            }
        }
    }
    Ok(())
}

/// Glue sections over the two factors and test the product map.
pub fn product_splitting<G1: Group, G2: Group>(
    ext: &CocycleExtension<ProductGroup<G1, G2>>,
    phi1: &dyn Fn(&G1::Elem) -> ExtElem<Pair<G1, G2>>,
    phi2: &dyn Fn(&G2::Elem) -> ExtElem<Pair<G1, G2>>,
    samples1: &[G1::Elem],
    samples2: &[G2::Elem],
) -> Result<SplittingReport, ExtensionError> {
    let base = ext.base();
    let lifts_left = |g: &G1::Elem, e: &ExtElem<Pair<G1, G2>>| ext.project(e) == base.include_left(g);
    let lifts_right = |g: &G2::Elem, e: &ExtElem<Pair<G1, G2>>| ext.project(e) == base.include_right(g);
    check_section(&base.left, ext, phi1, &lifts_left, samples1, "left")?;
    check_section(&base.right, ext, phi2, &lifts_right, samples2, "right")?;

    let phi = |p: &Pair<G1, G2>| ext.mul(&phi1(&p.0), &phi2(&p.1));
    let pairs: Vec<Pair<G1, G2>> = samples1.iter().cloned().zip(samples2.iter().cloned()).collect();
    let mut failure = None;
    for (k, w) in pairs.windows(2).enumerate() {
        if phi(&base.mul(&w[0], &w[1])) != ext.mul(&phi(&w[0]), &phi(&w[1])) {
            failure = Some(format!("phi is not multiplicative on sample pair {k}"));
            break;
        }
    }
    if pairs.len() == 1 && failure.is_none() {
        let p = &pairs[0];
        if phi(&base.mul(p, p)) != ext.mul(&phi(p), &phi(p)) {
            failure = Some("phi is not multiplicative on the square of sample 0".into());
        }
    }

    let mut nontrivial = false;
    let mut witness = None;
    let mut homomorphic = true;
    for (i, g1) in samples1.iter().enumerate() {
        let psi = |g2: &G2::Elem| ext.commutator(&phi1(g1), &phi2(g2));
        for (j, g2) in samples2.iter().enumerate() {
            let value = psi(g2);
            if !ext.is_identity(&value) && witness.is_none() {
                nontrivial = true;
                witness = Some(format!("psi at samples ({i}, {j}) has central part {:?}", value.z));
            }
            if let Some(h2) = samples2.get(j + 1) {
                if psi(&base.right.mul(g2, h2)) != ext.mul(&value, &psi(h2)) {
                    homomorphic = false;
                }
            }
        }
    }
    Ok(SplittingReport {
        homomorphism_holds: failure.is_none(),
        failure,
        obstruction: Obstruction { nontrivial, homomorphic_in_second: homomorphic, witness },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::groups::{unitriangular, unitriangular_extension, MatrixGroup};
    use crate::extensions::heisenberg::{sl_basis, HeisenbergLikeGroup};
    use crate::kernel::{Matrix, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn lifts_in_unitriangular_extension() {
        let ext = unitriangular_extension(q(2));
        let g = unitriangular(&q(1), &q(3), &q(0));
        let h = unitriangular(&q(-2), &q(5), &q(1));
        let lifts = [
            (ext.lift(&g), ext.lift(&h)),
            (ext.element(g.clone(), vec![q(7)]), ext.element(h.clone(), vec![Rational::frac(-1, 3)])),
        ];
        assert!(commutator_lift_invariance(&ext, &g, &h, lifts).unwrap().equal);
        let wrong = [(ext.lift(&h), ext.lift(&h)), (ext.lift(&g), ext.lift(&h))];
        assert_eq!(commutator_lift_invariance(&ext, &g, &h, wrong), Err(ExtensionError::BadLift));
    }

    #[test]
    fn trivial_extension_of_sl2_squared_splits() {
        let g = MatrixGroup::new(2, &q(1));
        let ext = CocycleExtension::trivial(ProductGroup::new(g.clone(), g), 1);
        let m = crate::chevalley::ChevalleyModel::new(crate::rootsys::RootKind::A(2)).unwrap();
        let a = m.system().parse_root("e1-e2").unwrap();
        // SL₂ elements taken from the upper-left block of SL₃.
        let block = |x: &crate::chevalley::GroupElement<Rational>| {
            let f = |mm: &Matrix<Rational>| Matrix::from_fn(2, 2, |i, j| mm.get(i, j).clone());
            crate::chevalley::GroupElement::with_inverse(f(x.matrix()), f(x.inverse_matrix())).unwrap()
        };
        let samples: Vec<_> =
            [m.e(&a, &q(2)).unwrap(), m.w(&a, &q(3)).unwrap(), m.e(&a.neg(), &q(-1)).unwrap(), m.h(&a, &q(5)).unwrap()]
                .iter()
                .map(block)
                .collect();
        let base = ext.base().clone();
        let phi1 = |x: &_| ext.lift(&base.include_left(x));
        let phi2 = |x: &_| ext.lift(&base.include_right(x));
        let rep = product_splitting(&ext, &phi1, &phi2, &samples, &samples).unwrap();
        assert!(rep.homomorphism_holds);
        assert!(!rep.obstruction.nontrivial);
    }

    #[test]
    fn heisenberg_obstruction() {
        let v = HeisenbergLikeGroup::killing(2);
        let ext = v.as_extension();
        let basis = sl_basis(2);
        let base = ext.base().clone();
        let phi1 = |a: &Matrix<Rational>| ext.lift(&base.include_left(a));
        let phi2 = |b: &Matrix<Rational>| ext.lift(&base.include_right(b));
        let rep = product_splitting(ext, &phi1, &phi2, &basis, &basis).unwrap();
        assert!(!rep.homomorphism_holds);
        assert!(rep.obstruction.nontrivial);
        assert!(rep.obstruction.homomorphic_in_second);
    }
}
