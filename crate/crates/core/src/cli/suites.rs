//! The sweeps behind each suite. Every suite draws from its own generator
//! seeded with the configured seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chevalley::{
    congruence_dimensions, formal_trunc_pair, golden_text, graded_piece, infer_structure_constants,
    infer_structure_constants_trunc, levi_decompose, perfectness_witness, verify_commutator, ChevalleyModel,
    GroupElement, StructureConstants,
};
use crate::derivations::{number_ring_rigidity, smoothness_scan, BaseRing, CurveFile};
use crate::extensions::{
    commutator_identity_holds, commutator_lift_invariance, decompose_algebra, group_axioms_hold, heisenberg_commutator,
    product_splitting, sl_basis, splitness_verdict, BilinearForm, FactorKind, FinDimAlgebra, HeisenbergLikeGroup,
    SplitnessVerdict,
};
use crate::kernel::{Matrix, MultiPoly, NumberField, NumberFieldElement, Rational, Ring};
use crate::rings::{factor_one_minus_ux, trunc_inv, unit_group_witness, verify_unit_witness, Trunc};
use crate::rootsys::RootKind;
use crate::steinberg::{
    check_symbol_relations, derived_symbol_identities, sample_triples, symbol_is_central_kernel, SymbolRelation,
    TameSymbol,
};

use super::{Check, Classifier, CliError, Report, Status, Suite, SuiteConfig};

/// Curve files run by `derivations` when no input is given.
pub const CURVE_INPUTS: [(&str, &str); 4] = [
    ("cusp", include_str!("../../golden/cusp.curve")),
    ("circle", include_str!("../../golden/circle.curve")),
    ("line", include_str!("../../golden/line.curve")),
    ("sqrt2_polynomial", include_str!("../../golden/sqrt2_polynomial.curve")),
];

const ALL_SYSTEMS: [RootKind; 3] = [RootKind::A(2), RootKind::A(3), RootKind::C2];

pub fn run_suite(config: &SuiteConfig) -> Result<Report, CliError> {
    config.validate()?;
    let suites: Vec<Suite> = match config.suite {
        Suite::All => Suite::COMPONENTS.to_vec(),
        s => vec![s],
    };
    let mut checks = Vec::new();
    for suite in suites {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let part = match suite {
            Suite::Relations => relations(config)?,
            Suite::Symbols => symbols(config, &mut rng)?,
            Suite::Units => units(config, &mut rng)?,
            Suite::Filtration => filtration(config, &mut rng)?,
            Suite::Extensions => extensions(config, &mut rng)?,
            Suite::Derivations => derivations(config)?,
            Suite::All => unreachable!("expanded above"),
        };
        checks.extend(part);
    }
    Ok(Report::new(config.suite.name(), config.seed, checks))
}

fn read_input(config: &SuiteConfig) -> Result<Option<(String, String)>, CliError> {
    let Some(path) = &config.input else { return Ok(None) };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "input".into());
    Ok(Some((stem, text)))
}

fn rational<G: Rng>(rng: &mut G, bound: i64) -> Rational {
    Rational::frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

fn nonzero_rational<G: Rng>(rng: &mut G, bound: i64) -> Rational {
    loop {
        let q = rational(rng, bound);
        if !q.is_zero() {
            return q;
        }
    }
}

fn trunc<G: Rng>(rng: &mut G, d: usize, unit: bool) -> Trunc<Rational> {
    let one = Rational::one();
    let mut coeffs: Vec<Rational> = (0..d).map(|_| rational(rng, 9)).collect();
    if unit {
        coeffs[0] = nonzero_rational(rng, 9);
    }
    Trunc::padded(d, coeffs, &one)
}

fn ring_name(d: Option<usize>) -> String {
    match d {
        None => "Q".into(),
        Some(d) => format!("Q[e]/(e^{d})"),
    }
}

// ---------------------------------------------------------------- relations

fn relations(config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let systems = config.system.map_or(ALL_SYSTEMS.to_vec(), |k| vec![k]);
    let truncs = config.trunc.map_or(vec![2, 3, 4], |d| vec![d]);
    let input = read_input(config)?;
    if input.is_some() && systems.len() != 1 {
        return Err(CliError::Usage("--input for relations needs --system".into()));
    }
    let mut out = Vec::new();
    for kind in systems {
        let model = ChevalleyModel::new(kind).map_err(CliError::lib)?;
        let prefix = format!("relations/{kind}");
        let inferred = infer_structure_constants(&model).map_err(CliError::lib)?;
        let constants = match &input {
            Some((_, text)) => StructureConstants::from_text(&model, text).map_err(CliError::lib)?,
            None => inferred.clone(),
        };
        if let Some(golden) = golden_text(kind) {
            let same = inferred.to_text() == golden;
            out.push(Check::new(
                format!("{prefix}/golden-table"),
                same,
                format!(
                    "{} ordered pairs, {} with nonempty root string",
                    inferred.pairs().count(),
                    inferred.nonempty_pairs()
                ),
            ));
        }
        for &d in &truncs {
            let over = infer_structure_constants_trunc(&model, d).map_err(CliError::lib)?;
            out.push(Check::new(
                format!("{prefix}/constants-agree/{}", ring_name(Some(d))),
                over == inferred,
                "inferred table equals the table over Q",
            ));
        }

        let vars = MultiPoly::variables(&["s", "t"]);
        let s = MultiPoly::var(&vars, "s").map_err(CliError::lib)?;
        let t = MultiPoly::var(&vars, "t").map_err(CliError::lib)?;
        out.push(additivity(&model, &prefix, None, &s, &t)?);
        for &d in &truncs {
            let (s, t) = formal_trunc_pair(d).map_err(CliError::lib)?;
            out.push(additivity(&model, &prefix, Some(d), &s, &t)?);
        }

        for ((a, b), _) in constants.pairs() {
            let rep = verify_commutator(&model, &constants, a, b, &s, &t).map_err(CliError::lib)?;
            let witness = (!rep.holds).then(|| commutator_witness(&rep.lhs, &rep.rhs, a, b, "s", "t"));
            out.push(Check::new(format!("{prefix}/commutator/Q/({a},{b})"), true, "formal s, t").with_witness(witness));
        }
        for &d in &truncs {
            let (s, t) = formal_trunc_pair(d).map_err(CliError::lib)?;
            let mut count = 0;
            let mut witness = None;
            for ((a, b), _) in constants.pairs() {
                let rep = verify_commutator(&model, &constants, a, b, &s, &t).map_err(CliError::lib)?;
                count += 1;
                if !rep.holds && witness.is_none() {
                    witness = Some(commutator_witness(&rep.lhs, &rep.rhs, a, b, &s.to_string(), &t.to_string()));
                }
            }
            out.push(
                Check::new(
                    format!("{prefix}/commutator/{}", ring_name(Some(d))),
                    true,
                    format!("{count} ordered pairs, formal s, t"),
                )
                .with_witness(witness),
            );
        }
    }
    Ok(out)
}

fn additivity<R: Ring>(
    model: &ChevalleyModel,
    prefix: &str,
    d: Option<usize>,
    s: &R,
    t: &R,
) -> Result<Check, CliError> {
    let roots = model.system().roots();
    let mut witness = None;
    for r in roots {
        let lhs = model.e(r, s).map_err(CliError::lib)?.mul(&model.e(r, t).map_err(CliError::lib)?);
        let rhs = model.e(r, &s.add(t)).map_err(CliError::lib)?;
        if lhs != rhs {
            witness = Some(format!("root {r}: e(s)e(t) = {} but e(s+t) = {}", lhs.matrix(), rhs.matrix()));
            break;
        }
    }
    Ok(Check::new(
        format!("{prefix}/additivity/{}", ring_name(d)),
        true,
        format!("e(s)e(t) = e(s+t) for {} roots", roots.len()),
    )
    .with_witness(witness))
}

fn commutator_witness<R: Ring>(
    lhs: &GroupElement<R>,
    rhs: &GroupElement<R>,
    a: &crate::rootsys::Root,
    b: &crate::rootsys::Root,
    s: &str,
    t: &str,
) -> String {
    format!("alpha={a} beta={b} s={s} t={t} commutator={} product={}", lhs.matrix(), rhs.matrix())
}

// ------------------------------------------------------------------ symbols

fn symbols(config: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Check>, CliError> {
    let primes = config.prime.map_or(vec![2, 3, 5, 7], |p| vec![p]);
    let n = config.samples.unwrap_or(500);
    let mut out = Vec::new();
    for p in primes {
        let model = TameSymbol::new(p).map_err(|e| CliError::Usage(e.to_string()))?;
        let samples = sample_triples(rng, n, 30, p);
        let main = check_symbol_relations(&model, &samples);
        let derived = derived_symbol_identities(&model, &samples);
        for o in main.outcomes.iter().chain(&derived.outcomes) {
            out.push(
                Check::new(
                    format!("symbols/tame-{p}/{}", o.relation.label()),
                    true,
                    format!("{} [checked {}, skipped {}]", o.relation.statement(), o.checked, o.skipped),
                )
                .with_witness(o.witness.clone()),
            );
        }
        for (name, set) in [
            ("symplectic-set", &SymbolRelation::SYMPLECTIC[..]),
            ("nonsymplectic-set", &SymbolRelation::NONSYMPLECTIC[..]),
        ] {
            let labels: Vec<&str> = set.iter().map(|r| r.label()).collect();
            out.push(Check::new(
                format!("symbols/tame-{p}/{name}"),
                main.holds_all(set),
                format!("relations {}", labels.join(" ")),
            ));
        }
    }

    let systems = config.system.map_or(vec![RootKind::A(2), RootKind::C2], |k| vec![k]);
    let rings: Vec<Option<usize>> = match config.trunc {
        Some(d) => vec![None, Some(d)],
        None => vec![None, Some(2), Some(3), Some(4)],
    };
    let pairs = config.samples.unwrap_or(200);
    for kind in systems {
        let model = ChevalleyModel::new(kind).map_err(CliError::lib)?;
        let roots = model.system().roots().to_vec();
        for &d in &rings {
            let mut witness = None;
            for k in 0..pairs {
                let alpha = &roots[k % roots.len()];
                let (ok, shown) = match d {
                    None => {
                        let (u, v) = (nonzero_rational(rng, 9), nonzero_rational(rng, 9));
                        let rep = symbol_is_central_kernel(&u, &v, alpha, &model).map_err(CliError::lib)?;
                        (rep.evaluates_to_identity, format!("u={u} v={v}"))
                    }
                    Some(d) => {
                        let (u, v) = (trunc(rng, d, true), trunc(rng, d, true));
                        let rep = symbol_is_central_kernel(&u, &v, alpha, &model).map_err(CliError::lib)?;
                        (rep.evaluates_to_identity, format!("u={u} v={v}"))
                    }
                };
                if !ok && witness.is_none() {
                    witness = Some(format!("alpha={alpha} {shown}"));
                }
            }
            out.push(
                Check::new(
                    format!("symbols/kernel/{kind}/{}", ring_name(d)),
                    true,
                    format!("{pairs} unit pairs, symbol word evaluates to the identity"),
                )
                .with_witness(witness),
            );
        }
    }
    Ok(out)
}

// -------------------------------------------------------------------- units

fn units(config: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Check>, CliError> {
    let orders = config.trunc.map_or((2..=6).collect(), |d| vec![d]);
    let mut out = Vec::new();
    for &d in &orders {
        if d < 2 {
            out.push(Check::skip(format!("units/witness/d={d}"), "needs d >= 2"));
            continue;
        }
        let mut x = trunc(rng, d, true);
        let mut c = x.coeffs().to_vec();
        if c[1].is_zero() {
            c[1] = Rational::one();
            x = Trunc::padded(d, c, &Rational::one());
        }
        let mut tc: Vec<Rational> = (0..d).map(|_| rational(rng, 9)).collect();
        tc[0] = Rational::one();
        let target = Trunc::padded(d, tc, &Rational::one());
        let w = unit_group_witness(&x, &target).map_err(CliError::lib)?;
        let check = verify_unit_witness(&w, &target);
        let witness = (!check.passed()).then(|| {
            format!(
                "x={x} target={target} product_identity={} reproduces_target={}",
                check.product_identity, check.reproduces_target
            )
        });
        out.push(
            Check::new(
                format!("units/witness/d={d}"),
                true,
                format!("prod(1 + u_i delta) = 1 + sum e_k delta^k with {} formal roots", d - 1),
            )
            .with_witness(witness),
        );
    }

    let n = config.samples.unwrap_or(100);
    let mut witness = None;
    let mut done = 0;
    while done < n {
        let d = config.trunc.unwrap_or_else(|| rng.gen_range(2..=4));
        let x = trunc(rng, d, true);
        let u = rational(rng, 9);
        if (Rational::one() - &(&u * x.residue())).is_zero() {
            continue;
        }
        done += 1;
        let f = factor_one_minus_ux(&x, &u).map_err(CliError::lib)?;
        let direct = x.one_like().sub(&x.map(|c| c * &u));
        if (f.recompose() != direct || !f.unipotent.residue().is_one()) && witness.is_none() {
            witness = Some(format!("x={x} u={u}"));
        }
    }
    out.push(
        Check::new("units/one-minus-ux", true, format!("1 - ux = (1 - ux0)(1 + v delta) on {n} instances"))
            .with_witness(witness),
    );

    let d = 3;
    let vals = [-1i64, 0, 1];
    let mut witness = None;
    let mut count = 0;
    for a in vals {
        for b in vals {
            for c in vals {
                let x = Trunc::padded(
                    d,
                    vec![Rational::from_int(a), Rational::from_int(b), Rational::from_int(c)],
                    &Rational::one(),
                );
                count += 1;
                if trunc_inv(&x).is_ok() == x.residue().is_zero() && witness.is_none() {
                    witness = Some(format!("x={x}"));
                }
            }
        }
    }
    out.push(
        Check::new("units/unit-criterion", true, format!("invertible iff x0 != 0 on {count} elements of Q[e]/(e^3)"))
            .with_witness(witness),
    );
    Ok(out)
}

// --------------------------------------------------------------- filtration

fn congruence_element<G: Rng>(
    model: &ChevalleyModel,
    rng: &mut G,
    d: usize,
    s: usize,
) -> Result<GroupElement<Trunc<Rational>>, CliError> {
    let one = Rational::one();
    let eps_s = Trunc::epsilon(d, &one).pow(s as u32);
    let roots = model.system().roots();
    let mut g = model.identity(&eps_s);
    for _ in 0..3 {
        let r = &roots[rng.gen_range(0..roots.len())];
        let arg = eps_s.mul(&trunc(rng, d, false));
        g = g.mul(&model.e(r, &arg).map_err(CliError::lib)?);
    }
    let simple = model.system().simple_roots();
    let r = &simple[rng.gen_range(0..simple.len())];
    let u = eps_s.one_like().add(&eps_s.mul(&trunc(rng, d, false)));
    Ok(g.mul(&model.h(r, &u).map_err(CliError::lib)?))
}

fn filtration(config: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Check>, CliError> {
    let systems = config.system.map_or(vec![RootKind::A(2), RootKind::C2], |k| vec![k]);
    let orders = config.trunc.map_or(vec![2, 3, 4], |d| vec![d]);
    let pairs = config.samples.unwrap_or(20);
    let perfect = config.samples.unwrap_or(50);
    let mut out = Vec::new();
    for kind in systems {
        let model = ChevalleyModel::new(kind).map_err(CliError::lib)?;
        let lie_dim = model.system().len() + kind.rank();
        for &d in &orders {
            let dims = congruence_dimensions(&model, d).map_err(CliError::lib)?;
            let total: usize = dims.iter().sum();
            out.push(Check::new(
                format!("filtration/{kind}/congruence-dimension/d={d}"),
                total == (d - 1) * lie_dim,
                format!("levels {dims:?}, total {total}, expected {} = (d-1)*{lie_dim}", (d - 1) * lie_dim),
            ));
            for s in 1..d {
                let mut witness = None;
                for _ in 0..pairs {
                    let c1 = congruence_element(&model, rng, d, s)?;
                    let c2 = congruence_element(&model, rng, d, s)?;
                    let x1 = graded_piece(&c1, s).map_err(CliError::lib)?;
                    let x2 = graded_piece(&c2, s).map_err(CliError::lib)?;
                    let x12 = graded_piece(&c1.mul(&c2), s).map_err(CliError::lib)?;
                    let lie = model.in_lie_algebra(&x1).map_err(CliError::lib)?;
                    let sum = x1.try_add(&x2).map_err(CliError::lib)?;
                    if (!lie || x12 != sum) && witness.is_none() {
                        witness = Some(format!("c1={} c2={}", c1.matrix(), c2.matrix()));
                    }
                }
                out.push(
                    Check::new(
                        format!("filtration/{kind}/graded-piece/d={d}/s={s}"),
                        true,
                        format!("{pairs} pairs: piece in the Lie algebra and additive"),
                    )
                    .with_witness(witness),
                );
            }
            let mut witness = None;
            for _ in 0..pairs {
                let roots = model.system().roots();
                let r = &roots[rng.gen_range(0..roots.len())];
                let g = model.e(r, &trunc(rng, d, false)).map_err(CliError::lib)?;
                let h = model.h(r, &trunc(rng, d, true)).map_err(CliError::lib)?;
                let g = g.mul(&h);
                let parts = levi_decompose(&g);
                let unipotent = parts.congruence.map(|c| c.residue().clone()).is_identity();
                if (parts.recompose() != g || !unipotent) && witness.is_none() {
                    witness = Some(format!("g={}", g.matrix()));
                }
            }
            out.push(
                Check::new(
                    format!("filtration/{kind}/levi/d={d}"),
                    true,
                    format!("{pairs} elements: g = g0 c with c = 1 mod e"),
                )
                .with_witness(witness),
            );
        }

        for d in [None, Some(3)] {
            let mut witness = None;
            for _ in 0..perfect {
                let (ok, shown) = match d {
                    None => {
                        let r = rational(rng, 9);
                        let w = perfectness_witness(&model, &r, 2).map_err(CliError::lib)?;
                        (w.iter().all(|x| x.holds), format!("r={r}"))
                    }
                    Some(d) => {
                        let r = trunc(rng, d, false);
                        let w = perfectness_witness(&model, &r, 2).map_err(CliError::lib)?;
                        (w.iter().all(|x| x.holds), format!("r={r}"))
                    }
                };
                if !ok && witness.is_none() {
                    witness = Some(shown);
                }
            }
            out.push(
                Check::new(
                    format!("filtration/{kind}/perfectness/{}", ring_name(d)),
                    true,
                    format!("e(a, r) = [h(a, 2), e(a, r/3)] for every root and {perfect} values of r"),
                )
                .with_witness(witness),
            );
        }
    }
    Ok(out)
}

// --------------------------------------------------------------- extensions

fn sl_sample<G: Rng>(rng: &mut G, n: usize) -> Matrix<Rational> {
    let basis = sl_basis(n);
    let mut acc = Matrix::zeros(n, n, &Rational::zero());
    for b in &basis {
        let c = Rational::from_int(rng.gen_range(-3..=3));
        if !c.is_zero() {
            acc = acc.try_add(&b.scale(&c)).expect("same shape");
        }
    }
    acc
}

fn heisenberg_sample<G: Rng>(
    v: &HeisenbergLikeGroup,
    rng: &mut G,
) -> Result<crate::extensions::HeisenbergElem, CliError> {
    let n = v.size();
    v.element(sl_sample(rng, n), sl_sample(rng, n), rational(rng, 9)).map_err(CliError::lib)
}

fn extensions(config: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Check>, CliError> {
    let triples = config.samples.unwrap_or(500);
    let pairs = config.samples.unwrap_or(50);
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let v = HeisenbergLikeGroup::killing(n);
        let prefix = format!("extensions/heisenberg-sl{n}");
        let mut axioms = None;
        let mut identity = None;
        for _ in 0..triples {
            let (a, b, c) = (heisenberg_sample(&v, rng)?, heisenberg_sample(&v, rng)?, heisenberg_sample(&v, rng)?);
            if !group_axioms_hold(&v, &a, &b, &c) && axioms.is_none() {
                axioms = Some(format!("a={a:?} b={b:?} c={c:?}"));
            }
            if !commutator_identity_holds(&v, &a, &b, &c) && identity.is_none() {
                identity = Some(format!("u={a:?} v={b:?} w={c:?}"));
            }
        }
        out.push(Check::new(format!("{prefix}/group-axioms"), true, format!("{triples} triples")).with_witness(axioms));
        out.push(
            Check::new(
                format!("{prefix}/commutator-identity"),
                true,
                format!("[u,v][u,w] = [u,vw][v,[w,u]] on {triples} triples"),
            )
            .with_witness(identity),
        );

        let zero = v.zero_matrix();
        let mut witness = None;
        for _ in 0..pairs {
            let (a, b) = (sl_sample(rng, n), sl_sample(rng, n));
            let v1 = v.element(a.clone(), zero.clone(), Rational::zero()).map_err(CliError::lib)?;
            let v2 = v.element(zero.clone(), b.clone(), Rational::zero()).map_err(CliError::lib)?;
            let comm = heisenberg_commutator(&v, &v1, &v2);
            let expected = v
                .element(zero.clone(), zero.clone(), &Rational::from_int(2) * &v.form().eval(&a, &b))
                .map_err(CliError::lib)?;
            if comm != expected && witness.is_none() {
                witness = Some(format!("a={a} b={b} commutator={comm:?}"));
            }
        }
        out.push(
            Check::new(
                format!("{prefix}/commutator-witness"),
                true,
                format!("[(a,0,0),(0,b,0)] = (0,0,2f(a,b)) on {pairs} pairs"),
            )
            .with_witness(witness),
        );

        let verdict = splitness_verdict(&v);
        let detail = match &verdict {
            SplitnessVerdict::NonSplit { witness, commutator } => format!(
                "NON-SPLIT: [({}, 0, 0), (0, {}, 0)] has central part {}",
                witness.0.g.0, witness.1.g.1, commutator.z[0]
            ),
            SplitnessVerdict::Inconclusive { .. } => "no noncentral commutator found".into(),
        };
        out.push(Check::new(format!("{prefix}/non-split"), verdict.is_non_split(), detail));

        let control = HeisenbergLikeGroup::new(BilinearForm::zero(n));
        let split =
            matches!(splitness_verdict(&control), SplitnessVerdict::Inconclusive { section_is_homomorphism: true });
        out.push(Check::new(
            format!("extensions/zero-form-sl{n}/split"),
            split,
            "f = 0: (a, b) -> (a, b, 0) is a homomorphic section",
        ));

        let ext = v.as_extension();
        let mut witness = None;
        for _ in 0..pairs {
            let g = (sl_sample(rng, n), sl_sample(rng, n));
            let h = (sl_sample(rng, n), sl_sample(rng, n));
            let lift = |x: &(Matrix<Rational>, Matrix<Rational>), z: Rational| ext.element(x.clone(), vec![z]);
            let lifts = [
                (lift(&g, Rational::zero()), lift(&h, Rational::zero())),
                (lift(&g, rational(rng, 9)), lift(&h, rational(rng, 9))),
            ];
            let rep = commutator_lift_invariance(ext, &g, &h, lifts).map_err(CliError::lib)?;
            if !rep.equal && witness.is_none() {
                witness = Some(format!("g={:?} h={:?}", g, h));
            }
        }
        out.push(
            Check::new(
                format!("{prefix}/lift-invariance"),
                true,
                format!("commutators of lifts agree on {pairs} pairs"),
            )
            .with_witness(witness),
        );

        let samples: Vec<Matrix<Rational>> = (0..4).map(|_| sl_sample(rng, n)).collect();
        let phi1 = |a: &Matrix<Rational>| ext.element((a.clone(), zero.clone()), vec![Rational::zero()]);
        let phi2 = |b: &Matrix<Rational>| ext.element((zero.clone(), b.clone()), vec![Rational::zero()]);
        let rep = product_splitting(ext, &phi1, &phi2, &samples, &samples).map_err(CliError::lib)?;
        out.push(Check::new(
            format!("{prefix}/product-obstruction"),
            rep.obstruction.nontrivial && !rep.homomorphism_holds,
            format!(
                "sections over each factor exist, product map multiplicative: {}, obstruction nontrivial: {}",
                rep.homomorphism_holds, rep.obstruction.nontrivial
            ),
        ));
    }

    let q = Rational::from_int;
    let mut algebras: Vec<(String, FinDimAlgebra, Vec<Option<usize>>)> = vec![
        (
            "Q[X]/(X^2-X)".into(),
            FinDimAlgebra::from_univariate(&[q(1), q(-1), q(0)]).map_err(CliError::lib)?,
            vec![Some(1), Some(1)],
        ),
        (
            "Q[X]/(X^3)".into(),
            FinDimAlgebra::from_univariate(&[q(1), q(0), q(0), q(0)]).map_err(CliError::lib)?,
            vec![Some(3)],
        ),
        (
            "Q[X]/(X^2(X-1)^2)".into(),
            FinDimAlgebra::from_univariate(&[q(1), q(-2), q(1), q(0), q(0)]).map_err(CliError::lib)?,
            vec![Some(2), Some(2)],
        ),
        ("Q[e1,e2]/(e1,e2)^2".into(), FinDimAlgebra::square_zero(2).map_err(CliError::lib)?, vec![None]),
    ];
    if let Some((name, text)) = read_input(config)? {
        let b = FinDimAlgebra::parse(&text).map_err(CliError::lib)?;
        algebras = vec![(name, b, vec![])];
    }
    for (name, b, expected) in algebras {
        let check_name = format!("extensions/algebra/{name}");
        match decompose_algebra(&b) {
            Ok(dec) => {
                let mut orders = dec.orders();
                orders.sort();
                let mut want = expected.clone();
                want.sort();
                let shape = want.is_empty() || orders == want;
                let round_trip = dec.round_trip.unwrap_or(true);
                let cotangent = dec.factors.iter().all(|f| match f.kind {
                    FactorKind::NotPrincipal { cotangent_dim } => cotangent_dim >= 2,
                    FactorKind::Principal { .. } => true,
                });
                let mut check = Check::new(check_name, shape && round_trip && cotangent, dec.lines().join("; "));
                if !(shape && round_trip) {
                    check = check.with_witness(Some(b.to_text().replace('\n', "; ")));
                }
                out.push(check);
            }
            Err(e) => out.push(Check::new(check_name, false, "decomposition failed").with_witness(Some(e.to_string()))),
        }
    }
    Ok(out)
}

// -------------------------------------------------------------- derivations

const HYPOTHESIS: &str = "der_dim <= 1";

fn derivations(config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let inputs: Vec<(String, String)> = match read_input(config)? {
        Some(x) => vec![x],
        None => CURVE_INPUTS.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect(),
    };
    let mut out = Vec::new();
    for (name, text) in inputs {
        let file = CurveFile::parse(&text).map_err(CliError::lib)?;
        let prefix = format!("derivations/{name}");
        let outcomes = file.run();
        for (p, o) in file.points.iter().zip(&outcomes) {
            let mut check = Check::new(format!("{prefix}/point{}", o.point), o.passed(), o.to_string());
            if !o.passed() {
                check = check.with_witness(Some(format!("{} line {}: {o}", name, p.line)));
            }
            if let Some(dim) = o.dimension {
                let verdict = Status::from_bool(dim <= 1);
                let predicted = Status::from_bool(p.expect.is_none_or(|k| k <= 1));
                check = check.with_classifier(Classifier {
                    hypothesis: HYPOTHESIS.into(),
                    verdict,
                    expected: verdict == predicted,
                });
            }
            out.push(check);
        }

        let mut loc_witness = None;
        let mut mono_witness = None;
        for o in outcomes.iter().filter(|o| o.error.is_none()) {
            if o.localized_dimension.is_some_and(|k| Some(k) != o.dimension) && loc_witness.is_none() {
                loc_witness = Some(format!("{}: {:?} before, {:?} after", o.point, o.dimension, o.localized_dimension));
            }
            if let Some((rel, abs)) = o.mode_dimensions {
                if rel > abs && mono_witness.is_none() {
                    mono_witness = Some(format!("{}: relative {rel} > absolute {abs}", o.point));
                }
            }
        }
        out.push(
            Check::new(format!("{prefix}/localization"), true, "inverting 1 + sum X_i^2 leaves der_dim unchanged")
                .with_witness(loc_witness),
        );
        out.push(
            Check::new(format!("{prefix}/mode-monotonicity"), true, "relative dimension <= absolute dimension")
                .with_witness(mono_witness),
        );

        let rigidity = match &file.base {
            BaseRing::NumberRing { generator, minpoly } => {
                let field = NumberField::new(generator, minpoly.clone()).map_err(CliError::lib)?;
                let w = NumberFieldElement::generator(&field);
                let r = number_ring_rigidity(&file.base, Some(&w)).map_err(CliError::lib)?;
                let d = r.derivative_at_root.map(|x| x.to_string()).unwrap_or_default();
                Check::new(
                    format!("{prefix}/base-rigidity"),
                    r.rigid,
                    format!("m'({generator}) = {d}, Der({}) = 0", file.base),
                )
            }
            base => {
                let r = number_ring_rigidity::<Rational>(base, None).map_err(CliError::lib)?;
                Check::new(format!("{prefix}/base-rigidity"), r.rigid, format!("Der({base}) = 0"))
            }
        };
        out.push(rigidity);

        if matches!(file.base, BaseRing::Rationals) && file.vars == ["X", "Y"] && file.relations.len() == 1 {
            let points: Result<Vec<(Rational, Rational)>, _> = file
                .points
                .iter()
                .map(|p| {
                    let get = |k: &str| p.values.iter().find(|(n, _)| n == k).map(|(_, v)| v.parse::<Rational>());
                    match (get("X"), get("Y")) {
                        (Some(Ok(x)), Some(Ok(y))) => Ok((x, y)),
                        _ => Err(format!("line {}: scan needs rational X and Y", p.line)),
                    }
                })
                .collect();
            match points {
                Ok(points) => {
                    let scan = smoothness_scan(&file.relations[0], &points).map_err(CliError::lib)?;
                    let singular: Vec<String> = scan
                        .iter()
                        .filter(|r| r.on_curve && !r.smooth)
                        .map(|r| format!("({}, {}) dim {}", r.point.0, r.point.1, r.der_dim))
                        .collect();
                    let smooth = scan.iter().filter(|r| r.smooth).count();
                    let witness = scan.iter().find_map(|r| {
                        (!r.consistent())
                            .then(|| format!("({}, {}) smooth with der_dim {}", r.point.0, r.point.1, r.der_dim))
                    });
                    let detail = if singular.is_empty() {
                        format!("{smooth} smooth points, all of dimension 1")
                    } else {
                        format!("{smooth} smooth points of dimension 1; singular: {}", singular.join(", "))
                    };
                    out.push(Check::new(format!("{prefix}/smoothness-scan"), true, detail).with_witness(witness));
                }
                Err(msg) => out.push(Check::skip(format!("{prefix}/smoothness-scan"), msg)),
            }
        }
    }
    Ok(out)
}
