//! One PASS/FAIL line per acceptance criterion. A criterion passes when its
//! checks hold exactly and it finishes inside its time budget.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chevkern::chevalley::{
    congruence_dimensions, formal_trunc_pair, graded_piece, infer_structure_constants, infer_structure_constants_trunc,
    perfectness_witness, verify_commutator, ChevalleyModel, StructureConstants,
};
use chevkern::derivations::{der_dim, leibniz_check, number_ring_rigidity, AlgebraAtPoint, BaseRing, Mode};
use chevkern::extensions::{
    decompose_algebra, group_axioms_hold, heisenberg_commutator, sl_basis, splitness_verdict, BilinearForm, FactorKind,
    FinDimAlgebra, HeisenbergLikeGroup, SplitnessVerdict,
};
use chevkern::kernel::{Assignment, Matrix, MultiPoly, NumberField, NumberFieldElement, Rational, Ring};
use chevkern::rings::{factor_one_minus_ux, unit_group_witness, verify_unit_witness, Trunc};
use chevkern::rootsys::{Root, RootKind};
use chevkern::steinberg::{
    check_symbol_relations, derived_symbol_identities, sample_triples, symbol_is_central_kernel, SymbolModel,
    SymbolRelation, TameSymbol,
};

const SEED: u64 = 20240607;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn rat<G: Rng>(rng: &mut G) -> Rational {
    Rational::frac(rng.gen_range(-20..=20), rng.gen_range(1..=12))
}

fn nonzero<G: Rng>(rng: &mut G) -> Rational {
    loop {
        let r = rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn trunc<G: Rng>(rng: &mut G, d: usize, unit: bool) -> Trunc<Rational> {
    let mut c: Vec<Rational> = (0..d).map(|_| rat(rng)).collect();
    if unit {
        c[0] = nonzero(rng);
    }
    Trunc::padded(d, c, &q(1))
}

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { ok, detail: detail.into() }
    }
}

fn criterion(id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed < limit;
    let ok = out.ok && in_time;
    println!(
        "{} criterion {id}: {title}: {} [exact; {:.2} s, limit {} s{}]",
        if ok { "PASS" } else { "FAIL" },
        out.detail,
        elapsed.as_secs_f64(),
        limit.as_secs(),
        if in_time { "" } else { ", over budget" }
    );
    ok
}

/// Type A oracle: [E_ij(s), E_jk(t)] = E_ik(st), so N(e_i-e_j, e_j-e_k) = 1
/// and N(e_j-e_k, e_i-e_j) = -1.
fn type_a_oracle(a: &Root, b: &Root) -> Option<i64> {
    let pos = |r: &Root| r.coords().iter().position(|&c| c == 1).unwrap();
    let neg = |r: &Root| r.coords().iter().position(|&c| c == -1).unwrap();
    if neg(a) == pos(b) && pos(a) != neg(b) {
        Some(1)
    } else if pos(a) == neg(b) && neg(a) != pos(b) {
        Some(-1)
    } else {
        None
    }
}

fn chevalley_relations() -> Outcome {
    let mut pairs = 0;
    for kind in [RootKind::A(2), RootKind::A(3), RootKind::C2] {
        let m = ChevalleyModel::new(kind).unwrap();
        let consts = infer_structure_constants(&m).unwrap();
        let vars = MultiPoly::variables(&["s", "t"]);
        let s = MultiPoly::var(&vars, "s").unwrap();
        let t = MultiPoly::var(&vars, "t").unwrap();
        for ((a, b), terms) in consts.pairs() {
            if matches!(kind, RootKind::A(_)) {
                let got = terms.first().map(|x| x.n);
                if got != type_a_oracle(a, b) {
                    return Outcome::new(false, format!("{kind} N({a}, {b}) = {got:?} disagrees with the E_ij oracle"));
                }
            }
            if !verify_commutator(&m, &consts, a, b, &s, &t).unwrap().holds {
                return Outcome::new(false, format!("{kind} commutator ({a}, {b}) over Q"));
            }
            pairs += 1;
        }
        if kind == RootKind::C2 && !consts.values().any(|n| n.abs() == 2) {
            return Outcome::new(false, "C2 table has no constant of absolute value 2");
        }
        for r in m.system().roots() {
            if m.e(r, &s).unwrap().mul(&m.e(r, &t).unwrap()) != m.e(r, &s.add(&t)).unwrap() {
                return Outcome::new(false, format!("{kind} additivity at {r} over Q"));
            }
        }
        for d in [2, 3, 4] {
            let over: StructureConstants = infer_structure_constants_trunc(&m, d).unwrap();
            if over != consts {
                return Outcome::new(false, format!("{kind} constants over Q[e]/(e^{d}) differ from Q"));
            }
            let (s, t) = formal_trunc_pair(d).unwrap();
            for r in m.system().roots() {
                if m.e(r, &s).unwrap().mul(&m.e(r, &t).unwrap()) != m.e(r, &s.add(&t)).unwrap() {
                    return Outcome::new(false, format!("{kind} additivity at {r} over Q[e]/(e^{d})"));
                }
            }
            for ((a, b), _) in consts.pairs() {
                if !verify_commutator(&m, &over, a, b, &s, &t).unwrap().holds {
                    return Outcome::new(false, format!("{kind} commutator ({a}, {b}) over Q[e]/(e^{d})"));
                }
                pairs += 1;
            }
        }
    }
    Outcome::new(true, format!("A2, A3, C2 over Q and Q[e]/(e^d), d = 2..4: {pairs} pair identities, tables identical"))
}

fn symbol_kernel() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut total = 0;
    for kind in [RootKind::A(2), RootKind::C2] {
        let m = ChevalleyModel::new(kind).unwrap();
        let roots = m.system().roots().to_vec();
        for d in [None, Some(2), Some(3), Some(4)] {
            for k in 0..200 {
                let alpha = &roots[k % roots.len()];
                let ok = match d {
                    None => symbol_is_central_kernel(&nonzero(&mut rng), &nonzero(&mut rng), alpha, &m),
                    Some(d) => {
                        symbol_is_central_kernel(&trunc(&mut rng, d, true), &trunc(&mut rng, d, true), alpha, &m)
                    }
                }
                .unwrap()
                .evaluates_to_identity;
                if !ok {
                    return Outcome::new(false, format!("{kind} over {d:?}: symbol word is not the identity"));
                }
                total += 1;
            }
        }
    }
    Outcome::new(true, format!("{total} symbol words are the identity in SL3 and Sp4 (200 pairs per ring)"))
}

fn symbol_relations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let t3 = TameSymbol::new(3).unwrap();
    let t5 = TameSymbol::new(5).unwrap();
    // By hand: (3,3)_3 = (-1)^1 ≡ 2 and (5,2)_5 = 2^{-1} ≡ 3.
    let v33 = t3.symbol(&q(3), &q(3));
    let v52 = t5.symbol(&q(5), &q(2));
    if v33 != Some(2) || v52 != Some(3) {
        return Outcome::new(false, format!("worked values (3,3)_3 = {v33:?}, (5,2)_5 = {v52:?}"));
    }
    let mut checked = 0;
    for p in [2u64, 3, 5, 7] {
        let model = TameSymbol::new(p).unwrap();
        let samples = sample_triples(&mut rng, 500, 30, p);
        let main = check_symbol_relations(&model, &samples);
        let derived = derived_symbol_identities(&model, &samples);
        let needed = [
            SymbolRelation::A,
            SymbolRelation::B,
            SymbolRelation::C,
            SymbolRelation::D,
            SymbolRelation::E,
            SymbolRelation::G,
            SymbolRelation::Steinberg,
        ];
        if !main.holds_all(&needed) || !derived.all_passed() {
            let lines: Vec<String> =
                main.lines().into_iter().chain(derived.lines()).filter(|l| l.starts_with("FAIL")).collect();
            return Outcome::new(false, format!("p = {p}: {}", lines.join("; ")));
        }
        if main.outcome(SymbolRelation::A).unwrap().checked < 500 {
            return Outcome::new(false, format!("p = {p}: fewer than 500 samples checked"));
        }
        checked += samples.len();
    }
    Outcome::new(
        true,
        format!("(a)-(e), (g), (x,1-x)=1, (1,x)=1, (x,y)=(1/y,x) at p = 2, 3, 5, 7 on {checked} samples"),
    )
}

fn unit_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for d in 2..=6 {
        let mut x = trunc(&mut rng, d, true);
        if x.coeff(1).is_zero() {
            let mut c = x.coeffs().to_vec();
            c[1] = q(1);
            x = Trunc::padded(d, c, &q(1));
        }
        let mut tc: Vec<Rational> = (0..d).map(|_| rat(&mut rng)).collect();
        tc[0] = q(1);
        let target = Trunc::padded(d, tc, &q(1));
        let w = unit_group_witness(&x, &target).unwrap();
        let check = verify_unit_witness(&w, &target);
        if !check.passed() {
            return Outcome::new(false, format!("d = {d}: {check:?}"));
        }
        // Rebuild 1 + Σ s_k δ^k directly from the elementary values.
        let mut rebuilt = target.one_like();
        let mut dp = target.one_like();
        for s in &w.elementary {
            dp = dp.mul(&w.delta);
            rebuilt = rebuilt.add(&dp.map(|c| c * s));
        }
        if rebuilt != target {
            return Outcome::new(false, format!("d = {d}: 1 + sum s_k delta^k does not rebuild the target"));
        }
    }
    let mut done = 0;
    while done < 100 {
        let d = rng.gen_range(2..=4);
        let x = trunc(&mut rng, d, true);
        let u = rat(&mut rng);
        let scalar = &q(1) - &(&u * x.residue());
        if scalar.is_zero() {
            continue;
        }
        let f = factor_one_minus_ux(&x, &u).unwrap();
        // Oracle: coefficientwise 1 - u x.
        let mut c: Vec<Rational> = x.coeffs().iter().map(|c| -&(c * &u)).collect();
        c[0] = &c[0] + &q(1);
        if f.recompose() != Trunc::padded(d, c, &q(1)) {
            return Outcome::new(false, format!("x = {x}, u = {u}"));
        }
        done += 1;
    }
    Outcome::new(true, "product identity for d = 2..6 with formal roots; 100 factorizations of 1 - ux")
}

fn filtration() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let m = ChevalleyModel::new(RootKind::A(2)).unwrap();
    let roots = m.system().roots().to_vec();
    let n = 3;
    for d in 2..=4 {
        let dims = congruence_dimensions(&m, d).unwrap();
        let total: usize = dims.iter().sum();
        if total != (d - 1) * (n * n - 1) {
            return Outcome::new(false, format!("d = {d}: congruence dimension {total}"));
        }
        for s in 1..d {
            let eps = Trunc::epsilon(d, &q(1)).pow(s as u32);
            for _ in 0..20 {
                let mk = |rng: &mut ChaCha8Rng| {
                    let a = &roots[rng.gen_range(0..roots.len())];
                    let b = &roots[rng.gen_range(0..roots.len())];
                    let u = eps.one_like().add(&eps.mul(&trunc(rng, d, false)));
                    m.e(a, &eps.mul(&trunc(rng, d, false))).unwrap().mul(&m.h(b, &u).unwrap())
                };
                let (c1, c2) = (mk(&mut rng), mk(&mut rng));
                let x1 = graded_piece(&c1, s).unwrap();
                let x2 = graded_piece(&c2, s).unwrap();
                // Oracle: trace zero for sl3.
                if !x1.trace().is_zero() {
                    return Outcome::new(false, format!("d = {d}, s = {s}: piece has nonzero trace"));
                }
                if graded_piece(&c1.mul(&c2), s).unwrap() != x1.try_add(&x2).unwrap() {
                    return Outcome::new(false, format!("d = {d}, s = {s}: piece is not additive"));
                }
            }
        }
    }
    Outcome::new(true, "SL3 over Q[e]/(e^d), d = 2..4: pieces trace zero and additive, totals (d-1)*8")
}

fn perfectness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut count = 0;
    for kind in [RootKind::A(2), RootKind::A(3), RootKind::C2] {
        let m = ChevalleyModel::new(kind).unwrap();
        for _ in 0..50 {
            let r = rat(&mut rng);
            if !perfectness_witness(&m, &r, 2).unwrap().iter().all(|w| w.holds) {
                return Outcome::new(false, format!("{kind}: r = {r} over Q"));
            }
            let r = trunc(&mut rng, 3, false);
            if !perfectness_witness(&m, &r, 2).unwrap().iter().all(|w| w.holds) {
                return Outcome::new(false, format!("{kind}: r = {r} over Q[e]/(e^3)"));
            }
            count += 2 * m.system().len();
        }
    }
    Outcome::new(true, format!("e(a, r) = [h(a, 2), e(a, r/3)] in {count} cases (A2, A3, C2)"))
}

/// Killing form oracle: trace of ad x ∘ ad y on gl_n with basis E_kl.
fn killing_oracle(x: &Matrix<Rational>, y: &Matrix<Rational>) -> Rational {
    let n = x.rows();
    let ad = |z: &Matrix<Rational>| {
        let mut cols = Vec::new();
        for k in 0..n {
            for l in 0..n {
                let mut e = Matrix::zeros(n, n, &q(0));
                e.set(k, l, q(1));
                let c = z.matmul(&e).unwrap().try_sub(&e.matmul(z).unwrap()).unwrap();
                cols.push(c.entries().to_vec());
            }
        }
        Matrix::from_fn(n * n, n * n, |i, j| cols[j][i].clone())
    };
    ad(x).matmul(&ad(y)).unwrap().trace()
}

fn counterexample() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in [2usize, 3] {
        let v = HeisenbergLikeGroup::killing(n);
        let basis = sl_basis(n);
        let sl = |rng: &mut ChaCha8Rng| {
            let mut acc = Matrix::zeros(n, n, &q(0));
            for b in &basis {
                acc = acc.try_add(&b.scale(&q(rng.gen_range(-3..=3)))).unwrap();
            }
            acc
        };
        for _ in 0..500 {
            let el = |rng: &mut ChaCha8Rng| v.element(sl(rng), sl(rng), rat(rng)).unwrap();
            let (a, b, c) = (el(&mut rng), el(&mut rng), el(&mut rng));
            if !group_axioms_hold(&v, &a, &b, &c) {
                return Outcome::new(false, format!("sl{n}: group axioms fail"));
            }
        }
        let zero = v.zero_matrix();
        for _ in 0..20 {
            let (a, b) = (sl(&mut rng), sl(&mut rng));
            let v1 = v.element(a.clone(), zero.clone(), q(0)).unwrap();
            let v2 = v.element(zero.clone(), b.clone(), q(0)).unwrap();
            let comm = heisenberg_commutator(&v, &v1, &v2);
            let f = killing_oracle(&a, &b);
            if comm.g.0 != zero || comm.g.1 != zero || comm.z[0] != &q(2) * &f {
                return Outcome::new(
                    false,
                    format!("sl{n}: commutator central part {} vs 2f = {}", comm.z[0], &q(2) * &f),
                );
            }
        }
        if !splitness_verdict(&v).is_non_split() {
            return Outcome::new(false, format!("sl{n}: not certified non-split"));
        }
        let control = HeisenbergLikeGroup::new(BilinearForm::zero(n));
        if splitness_verdict(&control) != (SplitnessVerdict::Inconclusive { section_is_homomorphism: true }) {
            return Outcome::new(false, format!("sl{n}: zero-form control not split"));
        }
    }
    let b = FinDimAlgebra::square_zero(2).unwrap();
    let dec = decompose_algebra(&b).unwrap();
    let kinds: Vec<&FactorKind> = dec.factors.iter().map(|f| &f.kind).collect();
    if kinds != [&FactorKind::NotPrincipal { cotangent_dim: 2 }] {
        return Outcome::new(false, format!("K[e1,e2]/(e1,e2)^2 classified as {kinds:?}"));
    }
    Outcome::new(true, "sl2, sl3: 500 triples each, [v1,v2] = (0,0,2f(a,b)), NON-SPLIT; f = 0 split; K[e1,e2] NOT-PRINCIPAL, dim m/m^2 = 2")
}

fn decomposition() -> Outcome {
    let cases: [(&str, Vec<Rational>, Vec<usize>); 3] = [
        ("Q[X]/(X^2-X)", vec![q(1), q(-1), q(0)], vec![1, 1]),
        ("Q[X]/(X^3)", vec![q(1), q(0), q(0), q(0)], vec![3]),
        ("Q[X]/(X^2(X-1)^2)", vec![q(1), q(-2), q(1), q(0), q(0)], vec![2, 2]),
    ];
    for (name, modulus, want) in cases {
        let b = FinDimAlgebra::from_univariate(&modulus).unwrap();
        let dec = decompose_algebra(&b).unwrap();
        let mut orders: Vec<usize> = dec.orders().into_iter().map(|o| o.unwrap_or(0)).collect();
        orders.sort();
        if orders != want || dec.round_trip != Some(true) {
            return Outcome::new(false, format!("{name}: orders {orders:?}, round trip {:?}", dec.round_trip));
        }
        // Oracle: complete orthogonal idempotents summing to 1.
        let idem: Vec<&Vec<Rational>> = dec.factors.iter().map(|f| &f.idempotent).collect();
        let mut sum = vec![q(0); b.dim()];
        for (i, e) in idem.iter().enumerate() {
            if b.mul(e, e) != **e {
                return Outcome::new(false, format!("{name}: factor {i} idempotent is not idempotent"));
            }
            for (j, f) in idem.iter().enumerate() {
                if i != j && b.mul(e, f).iter().any(|c| !c.is_zero()) {
                    return Outcome::new(false, format!("{name}: idempotents {i}, {j} not orthogonal"));
                }
            }
            sum = sum.iter().zip(e.iter()).map(|(a, c)| a + c).collect();
        }
        if sum != b.unit() {
            return Outcome::new(false, format!("{name}: idempotents do not sum to 1"));
        }
    }
    Outcome::new(true, "Q+Q, Q[e]/(e^3), Q[e]/(e^2)+Q[e]/(e^2) with round-trip multiplication tables")
}

fn cusp_problem(x: Rational, y: Rational) -> AlgebraAtPoint<Rational> {
    let point: Assignment<Rational> = [("X".to_string(), x), ("Y".to_string(), y)].into_iter().collect();
    AlgebraAtPoint::new(BaseRing::Rationals, &["X", "Y"], &["X^3 - Y^2"], point, &q(1)).unwrap()
}

fn derivations() -> Outcome {
    let origin = der_dim(&cusp_problem(q(0), q(0)), Mode::Relative).unwrap();
    if origin.dimension() != 2 {
        return Outcome::new(false, format!("cusp origin dimension {}", origin.dimension()));
    }
    for t in [q(1), q(2), q(-2), q(3), Rational::frac(1, 2)] {
        let (x, y) = (&t * &t, &(&t * &t) * &t);
        // Oracle: nullity of the row (3x^2, -2y) in two columns.
        let row_nonzero = !(&q(3) * &(&x * &x)).is_zero() || !(&q(2) * &y).is_zero();
        let expected = 2 - usize::from(row_nonzero);
        let p = cusp_problem(x.clone(), y.clone());
        let space = der_dim(&p, Mode::Relative).unwrap();
        if space.dimension() != expected || expected != 1 || !leibniz_check(&p, &space).unwrap() {
            return Outcome::new(false, format!("cusp at ({x}, {y}): dimension {}", space.dimension()));
        }
        let loc = p.localize("1 + X^2 + Y^2").unwrap();
        if der_dim(&loc, Mode::Relative).unwrap().dimension() != 1 {
            return Outcome::new(false, format!("cusp at ({x}, {y}): localization changed the dimension"));
        }
    }
    let loc = cusp_problem(q(0), q(0)).localize("1 + X").unwrap();
    if der_dim(&loc, Mode::Relative).unwrap().dimension() != 2 {
        return Outcome::new(false, "cusp origin: localization changed the dimension");
    }
    let circle = [
        (q(1), q(0)),
        (q(0), q(1)),
        (Rational::frac(3, 5), Rational::frac(4, 5)),
        (Rational::frac(-5, 13), Rational::frac(12, 13)),
    ];
    for (f, pts) in
        [("X^2 + Y^2 - 1", circle.to_vec()), ("Y", vec![(q(0), q(0)), (q(7), q(0)), (Rational::frac(-2, 3), q(0))])]
    {
        for (x, y) in pts {
            let point: Assignment<Rational> =
                [("X".to_string(), x.clone()), ("Y".to_string(), y.clone())].into_iter().collect();
            let p = AlgebraAtPoint::new(BaseRing::Rationals, &["X", "Y"], &[f], point, &q(1)).unwrap();
            if der_dim(&p, Mode::Relative).unwrap().dimension() != 1 {
                return Outcome::new(false, format!("{f} at ({x}, {y})"));
            }
            let loc = p.localize("1 + X^2 + Y^2").unwrap();
            if der_dim(&loc, Mode::Relative).unwrap().dimension() != 1 {
                return Outcome::new(false, format!("{f} at ({x}, {y}): localization changed the dimension"));
            }
        }
    }
    let field = NumberField::quadratic("w", 2);
    let w = NumberFieldElement::generator(&field);
    let base = BaseRing::NumberRing { generator: "w".into(), minpoly: vec![q(-2), q(0), q(1)] };
    let rig = number_ring_rigidity(&base, Some(&w)).unwrap();
    // Oracle: m'(w) = 2w.
    if !rig.rigid || rig.derivative_at_root != Some(w.add(&w)) {
        return Outcome::new(false, "Z[sqrt 2] is not rigid");
    }
    let point: Assignment<NumberFieldElement> =
        [("w".to_string(), w.clone()), ("X".to_string(), w.add(&w.one_like()))].into_iter().collect();
    let p = AlgebraAtPoint::new(base, &["X"], &[], point, &w).unwrap();
    let abs = der_dim(&p, Mode::Absolute).unwrap();
    if abs.dimension() != 1 {
        return Outcome::new(false, format!("Z[sqrt 2][X] absolute dimension {}", abs.dimension()));
    }
    Outcome::new(
        true,
        "cusp: 2 at origin, 1 at five smooth points; circle, line 1; Z[sqrt 2][X] absolute 1; localization invariant",
    )
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_chevkern"))
            .args(["all", "--seed", "42", "--format", "json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let code = a.status.code();
    if code != Some(0) || b.status.code() != Some(0) {
        return Outcome::new(
            false,
            format!("exit codes {:?}, {:?}: {}", code, b.status.code(), String::from_utf8_lossy(&a.stderr)),
        );
    }
    if a.stdout != b.stdout {
        return Outcome::new(false, "reports differ");
    }
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    Outcome::new(
        true,
        format!("{} bytes identical across runs, {} checks, exit code 0", a.stdout.len(), v["summary"]["total"]),
    )
}

fn main() {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "Chevalley relations", s(10), chevalley_relations),
        criterion(2, "Symbol kernel", s(5), symbol_kernel),
        criterion(3, "Symbol relations", s(5), symbol_relations),
        criterion(4, "Unit identities", s(5), unit_identities),
        criterion(5, "Filtration", s(5), filtration),
        criterion(6, "Perfectness witnesses", s(2), perfectness),
        criterion(7, "Counterexample", s(5), counterexample),
        criterion(8, "Algebra decomposition", s(5), decomposition),
        criterion(9, "Derivations", s(5), derivations),
        criterion(10, "Determinism", s(60), determinism),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if failed.is_empty() {
        println!("acceptance: all 10 criteria pass");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
