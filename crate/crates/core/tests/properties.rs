use proptest::prelude::*;

use chevkern::chevalley::{graded_piece, levi_decompose, ChevalleyModel};
use chevkern::derivations::{der_dim, leibniz_check, smoothness_scan, AlgebraAtPoint, BaseRing, Mode};
use chevkern::extensions::{
    commutator_identity_holds, commutator_lift_invariance, decompose_algebra, group_axioms_hold, unitriangular,
    unitriangular_extension, FactorKind, FinDimAlgebra, Group, HeisenbergLikeGroup, MatrixGroup,
};
use chevkern::kernel::{rref, Assignment, Matrix, MultiPoly, NumberField, NumberFieldElement, Rational, Ring};
use chevkern::rings::{factor_one_minus_ux, trunc_inv, Trunc};
use chevkern::rootsys::{enumerate_roots, RootKind};
use chevkern::steinberg::{
    check_symbol_relations, symbol_is_central_kernel, word_eval, Letter, SteinbergWord, SymbolRelation, TameSymbol,
};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=9).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn trunc_elem(d: usize) -> impl Strategy<Value = Trunc<Rational>> {
    prop::collection::vec(rat(), d).prop_map(move |c| Trunc::padded(d, c, &q(1)))
}

fn trunc_unit(d: usize) -> impl Strategy<Value = Trunc<Rational>> {
    trunc_elem(d).prop_filter("unit", |x| !x.residue().is_zero())
}

fn kind() -> impl Strategy<Value = RootKind> {
    prop_oneof![Just(RootKind::A(2)), Just(RootKind::A(3)), Just(RootKind::C2)]
}

fn sqrt2(c: &[Rational]) -> NumberFieldElement {
    NumberFieldElement::new(&NumberField::quadratic("w", 2), c.to_vec())
}

fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> Matrix<Rational> {
    let mut m = Matrix::identity(n, &q(1));
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        let mut e = Matrix::identity(n, &q(1));
        e.set(i, j, q(c));
        m = m.matmul(&e).unwrap();
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    // kernel

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-3i64..=3, 16)) {
        let m = Matrix::from_fn(rows, cols, |i, j| q(seed[i * 4 + j]));
        let r = rref(&m).unwrap();
        prop_assert_eq!(r.rank + r.nullspace.len(), cols);
        for v in &r.nullspace {
            let col = Matrix::from_fn(cols, 1, |i, _| v[i].clone());
            prop_assert!(m.matmul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn unimodular_inverse(n in 1usize..=5, ops in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..12)) {
        let m = unimodular(n, &ops);
        let inv = m.inverse().unwrap();
        prop_assert!(inv.matmul(&m).unwrap().is_identity());
        prop_assert!(inv.entries().iter().all(Rational::is_integer));
    }

    #[test]
    fn number_field_associative(a in prop::collection::vec(rat(), 2), b in prop::collection::vec(rat(), 2), c in prop::collection::vec(rat(), 2)) {
        let (a, b, c) = (sqrt2(&a), sqrt2(&b), sqrt2(&c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        let w = NumberFieldElement::generator(a.field());
        prop_assert!(w.eval_poly(a.field().minpoly()).is_zero());
    }

    #[test]
    fn polynomial_distributivity(a in prop::collection::vec(-4i64..=4, 6), b in prop::collection::vec(-4i64..=4, 6), c in prop::collection::vec(-4i64..=4, 6)) {
        let vars = MultiPoly::variables(&["X", "Y"]);
        let p = |k: &[i64]| {
            MultiPoly::parse(&format!("{}*X^2 + {}*X*Y + {}*Y^2 + {}*X + {}*Y + {}", k[0], k[1], k[2], k[3], k[4], k[5]), &vars).unwrap()
        };
        let (a, b, c) = (p(&a), p(&b), p(&c));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    // rings

    #[test]
    fn trunc_inverse(d in 1usize..=5, x in trunc_unit(5)) {
        let x = Trunc::padded(d, x.coeffs()[..d].to_vec(), &q(1));
        prop_assume!(!x.residue().is_zero());
        let inv = trunc_inv(&x).unwrap();
        prop_assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn one_minus_ux_recomposes(d in 2usize..=4, x in trunc_unit(4), u in rat()) {
        let x = Trunc::padded(d, x.coeffs()[..d].to_vec(), &q(1));
        prop_assume!(!(q(1) - &(&u * x.residue())).is_zero());
        let f = factor_one_minus_ux(&x, &u).unwrap();
        prop_assert_eq!(f.recompose(), x.one_like().sub(&x.map(|c| c * &u)));
    }

    // rootsys

    #[test]
    fn root_strings(k in kind()) {
        let sys = enumerate_roots(k).unwrap();
        let cap = if k == RootKind::C2 { 2 } else { 1 };
        for r in sys.roots() {
            prop_assert!(sys.contains(&r.neg()));
        }
        for (a, b) in sys.admissible_pairs() {
            let s = sys.root_string(&a, &b).unwrap();
            prop_assert!(s.terms.len() <= cap);
            prop_assert!(s.terms.iter().all(|t| sys.contains(&t.root)));
        }
    }

    // chevalley

    #[test]
    fn levi_reduction_multiplicative(a in trunc_elem(3), b in trunc_elem(3), u in trunc_unit(3), ri in 0usize..6, rj in 0usize..6) {
        let m = ChevalleyModel::new(RootKind::A(2)).unwrap();
        let roots = m.system().roots();
        let g = m.e(&roots[ri], &a).unwrap().mul(&m.h(&roots[rj], &u).unwrap());
        let h = m.e(&roots[rj], &b).unwrap();
        let lhs = levi_decompose(&g.mul(&h)).reductive;
        let rhs = levi_decompose(&g).reductive.mul(&levi_decompose(&h).reductive);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_piece_in_lie_algebra(k in kind(), s in 1usize..3, a in trunc_elem(3), b in trunc_elem(3), ri in 0usize..12, rj in 0usize..12) {
        let m = ChevalleyModel::new(k).unwrap();
        let roots = m.system().roots();
        let eps = Trunc::epsilon(3, &q(1)).pow(s as u32);
        let c1 = m.e(&roots[ri % roots.len()], &eps.mul(&a)).unwrap();
        let c2 = m.e(&roots[rj % roots.len()], &eps.mul(&b)).unwrap();
        let x1 = graded_piece(&c1, s).unwrap();
        prop_assert!(m.in_lie_algebra(&x1).unwrap());
        let sum = x1.try_add(&graded_piece(&c2, s).unwrap()).unwrap();
        prop_assert_eq!(graded_piece(&c1.mul(&c2), s).unwrap(), sum);
    }

    // steinberg

    #[test]
    fn word_eval_is_homomorphism(letters in prop::collection::vec((0usize..6, rat(), any::<bool>()), 0..8), split in 0usize..8) {
        let m = ChevalleyModel::new(RootKind::A(2)).unwrap();
        let roots = m.system().roots();
        let all: Vec<Letter<Rational>> = letters
            .iter()
            .map(|(i, t, inv)| Letter { root: roots[*i].clone(), t: t.clone(), exp: if *inv { -1 } else { 1 } })
            .collect();
        let k = split.min(all.len());
        let w1 = SteinbergWord::from_letters(all[..k].to_vec());
        let w2 = SteinbergWord::from_letters(all[k..].to_vec());
        let one = q(1);
        let lhs = word_eval(&w1.concat(&w2), &m, &one).unwrap();
        let rhs = word_eval(&w1, &m, &one).unwrap().mul(&word_eval(&w2, &m, &one).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        let full = SteinbergWord::from_letters(all.clone());
        let reduced = word_eval(&full.reduce(), &m, &one).unwrap();
        prop_assert_eq!(&reduced, &lhs);
        for r in 0..all.len() {
            let rot = full.rotate(r);
            prop_assert_eq!(word_eval(&rot.reduce(), &m, &one).unwrap(), word_eval(&rot, &m, &one).unwrap());
        }
    }

    #[test]
    fn symbols_in_kernel(k in prop_oneof![Just(RootKind::A(2)), Just(RootKind::C2)], d in 1usize..=4, u in trunc_unit(4), v in trunc_unit(4), ri in 0usize..8) {
        let m = ChevalleyModel::new(k).unwrap();
        let roots = m.system().roots();
        let cut = |x: &Trunc<Rational>| Trunc::padded(d, x.coeffs()[..d].to_vec(), &q(1));
        let rep = symbol_is_central_kernel(&cut(&u), &cut(&v), &roots[ri % roots.len()], &m).unwrap();
        prop_assert!(rep.evaluates_to_identity);
    }

    #[test]
    fn tame_symbol_relation_sets(p in prop_oneof![Just(2u64), Just(3), Just(5), Just(7)], xs in prop::collection::vec((nonzero_rat(), nonzero_rat(), nonzero_rat(), -2i32..=2), 1..20)) {
        let model = TameSymbol::new(p).unwrap();
        let pk = |k: i32| q(p as i64).powi(k).unwrap();
        let mut samples: Vec<_> = xs.iter().map(|(x, y, z, k)| (x * &pk(*k), y * &pk(-*k), z.clone())).collect();
        // holds_all needs every relation checked at least once; x = 1 skips (e).
        samples.push((q(2), q(3), q(5)));
        let rep = check_symbol_relations(&model, &samples);
        prop_assert!(rep.holds_all(&SymbolRelation::SYMPLECTIC));
        prop_assert!(rep.holds_all(&SymbolRelation::NONSYMPLECTIC));
    }

    // extensions

    #[test]
    fn heisenberg_axioms(n in 2usize..=3, e in prop::collection::vec(-3i64..=3, 3 * 2 * 9 + 3)) {
        let v = HeisenbergLikeGroup::killing(n);
        let sl = |off: usize| {
            let mut m = Matrix::from_fn(n, n, |i, j| q(e[off + i * n + j]));
            let t = m.trace();
            let last = m.get(n - 1, n - 1) - &t;
            m.set(n - 1, n - 1, last);
            m
        };
        let el = |k: usize| v.element(sl(18 * k), sl(18 * k + 9), q(e[54 + k])).unwrap();
        let (a, b, c) = (el(0), el(1), el(2));
        prop_assert!(group_axioms_hold(&v, &a, &b, &c));
        prop_assert!(commutator_identity_holds(&v, &a, &b, &c));
        let ext = v.as_extension();
        let shift = ext.central(vec![q(e[0])]);
        let lifts = [(a.clone(), b.clone()), (ext.mul(&a, &shift), ext.mul(&shift, &b))];
        prop_assert!(commutator_lift_invariance(ext, &a.g, &b.g, lifts).unwrap().equal);
    }

    #[test]
    fn matrix_groups_commutator_identity(x in prop::collection::vec(rat(), 9)) {
        let g = MatrixGroup::new(3, &q(1));
        let u = unitriangular(&x[0], &x[1], &x[2]);
        let v = unitriangular(&x[3], &x[4], &x[5]);
        let w = unitriangular(&x[6], &x[7], &x[8]);
        prop_assert!(commutator_identity_holds(&g, &u, &v, &w));
        prop_assert!(group_axioms_hold(&g, &u, &v, &w));
        let ext = unitriangular_extension(x[0].clone());
        let (lu, lv, lw) = (ext.lift(&u), ext.lift(&v), ext.lift(&w));
        prop_assert!(group_axioms_hold(&ext, &lu, &lv, &lw));
        prop_assert!(ext.cocycle_identity_holds(&u, &v, &w));
    }

    #[test]
    fn decomposition_round_trip(roots in prop::collection::vec((-3i64..=3, 1usize..=3), 1..=3)) {
        // Q[X]/(∏ (X - r)^k) for distinct integer roots r.
        let mut seen = std::collections::BTreeMap::new();
        for (r, k) in roots {
            seen.entry(r).or_insert(k);
        }
        let mut modulus = vec![q(1)];
        for (&r, &k) in &seen {
            for _ in 0..k {
                let mut next = modulus.clone();
                next.push(q(0));
                for (i, c) in modulus.iter().enumerate() {
                    next[i + 1] = &next[i + 1] - &(c * &q(r));
                }
                modulus = next;
            }
        }
        let b = FinDimAlgebra::from_univariate(&modulus).unwrap();
        let dec = decompose_algebra(&b).unwrap();
        prop_assert_eq!(dec.round_trip, Some(true));
        let mut orders: Vec<usize> = dec.orders().into_iter().map(Option::unwrap).collect();
        orders.sort();
        let mut want: Vec<usize> = seen.values().copied().collect();
        want.sort();
        prop_assert_eq!(orders, want);
        for f in &dec.factors {
            if let FactorKind::Principal { generator, order } = &f.kind {
                prop_assert!(b.pow(generator, *order).iter().all(Rational::is_zero));
                if *order > 1 {
                    prop_assert!(!b.pow(generator, order - 1).iter().all(Rational::is_zero));
                }
            }
        }
    }

    // derivations

    #[test]
    fn circle_points(t in rat()) {
        // (1 - t², 2t) / (1 + t²) lies on X² + Y² = 1.
        let den = &q(1) + &(&t * &t);
        let x = &(&q(1) - &(&t * &t)) / &den;
        let y = &(&q(2) * &t) / &den;
        let rep = smoothness_scan("X^2 + Y^2 - 1", &[(x, y)]).unwrap();
        prop_assert!(rep[0].on_curve && rep[0].smooth && rep[0].der_dim == 1);
    }

    #[test]
    fn cusp_points(t in rat()) {
        // (t², t³) lies on X³ = Y².
        let x = &t * &t;
        let y = &x * &t;
        let point: Assignment<Rational> = [("X".to_string(), x), ("Y".to_string(), y)].into_iter().collect();
        let p = AlgebraAtPoint::new(BaseRing::Rationals, &["X", "Y"], &["X^3 - Y^2"], point, &q(1)).unwrap();
        let rel = der_dim(&p, Mode::Relative).unwrap();
        let abs = der_dim(&p, Mode::Absolute).unwrap();
        prop_assert_eq!(rel.dimension(), if t.is_zero() { 2 } else { 1 });
        prop_assert!(rel.dimension() <= abs.dimension());
        prop_assert!(leibniz_check(&p, &rel).unwrap());
        let loc = p.localize("1 + X^2 + Y^2").unwrap();
        prop_assert_eq!(der_dim(&loc, Mode::Relative).unwrap().dimension(), rel.dimension());
    }

    #[test]
    fn number_ring_modes(x in prop::collection::vec(rat(), 2)) {
        let w = sqrt2(&[q(0), q(1)]);
        let point: Assignment<NumberFieldElement> =
            [("w".to_string(), w.clone()), ("X".to_string(), sqrt2(&x))].into_iter().collect();
        let base = BaseRing::NumberRing { generator: "w".into(), minpoly: vec![q(-2), q(0), q(1)] };
        let p = AlgebraAtPoint::new(base, &["X", "Y"], &["X - Y"], point.into_iter().chain([("Y".to_string(), sqrt2(&x))]).collect(), &w).unwrap();
        let rel = der_dim(&p, Mode::Relative).unwrap();
        let abs = der_dim(&p, Mode::Absolute).unwrap();
        prop_assert_eq!(rel.dimension(), 1);
        prop_assert_eq!(abs.dimension(), 1);
        prop_assert!(leibniz_check(&p, &abs).unwrap());
    }
}

#[test]
fn unit_criterion_exhaustive() {
    let vals = [-2i64, -1, 0, 1, 2];
    for a in vals {
        for b in vals {
            for c in vals {
                let x = Trunc::padded(3, vec![q(a), q(b), q(c)], &q(1));
                assert_eq!(trunc_inv(&x).is_ok(), a != 0, "{x}");
            }
        }
    }
}
