//! Concrete symbol models and the relation calculus for (x, y).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::kernel::{Rational, Ring};

use super::SteinbergError;

/// A map from pairs of nonzero rationals into an abelian group.
pub trait SymbolModel {
    type Value: Clone + PartialEq + fmt::Display;

    fn name(&self) -> String;
    /// `None` when x or y is zero.
    fn symbol(&self, x: &Rational, y: &Rational) -> Option<Self::Value>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn one(&self) -> Self::Value;
}

/// The tame symbol at p: (x, y) ↦ (-1)^{ab} x^b y^{-a} mod p, a = v_p(x), b = v_p(y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameSymbol {
    p: u64,
}

impl TameSymbol {
    pub fn new(p: u64) -> Result<Self, SteinbergError> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !prime {
            return Err(SteinbergError::NotPrime(p));
        }
        Ok(TameSymbol { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn reduce(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue below p")
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn pow_mod(&self, base: u64, exp: i64) -> u64 {
        let base = if exp < 0 { self.inv_mod(base) } else { base };
        let mut e = exp.unsigned_abs();
        let (mut acc, mut b) = (1 % self.p, base % self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(acc, b);
            }
            b = self.mul_mod(b, b);
            e >>= 1;
        }
        acc
    }

    fn inv_mod(&self, a: u64) -> u64 {
        self.pow_mod(a, self.p as i64 - 2)
    }

    /// Image of a p-adic unit in (Z/p)^×.
    fn unit_residue(&self, u: &Rational) -> u64 {
        self.mul_mod(self.reduce(u.numer()), self.inv_mod(self.reduce(u.denom())))
    }
}

impl SymbolModel for TameSymbol {
    type Value = u64;

    fn name(&self) -> String {
        format!("tame symbol at p = {}", self.p)
    }

    fn symbol(&self, x: &Rational, y: &Rational) -> Option<u64> {
        let p = BigInt::from(self.p);
        let (a, xu) = x.split_valuation(&p)?;
        let (b, yu) = y.split_valuation(&p)?;
        // p^{ab} from x^b cancels p^{-ab} from y^{-a}.
        let mut v = self.mul_mod(self.pow_mod(self.unit_residue(&xu), b), self.pow_mod(self.unit_residue(&yu), -a));
        if (a * b).rem_euclid(2) == 1 {
            v = self.mul_mod(v, self.p - 1);
        }
        Some(v)
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_mod(*a, *b)
    }

    fn one(&self) -> u64 {
        1 % self.p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolRelation {
    A,
    B,
    C,
    D,
    E,
    G,
    /// (x, 1 - x) = 1.
    Steinberg,
    /// (1, x) = 1.
    LeftOne,
    /// (x, 1) = 1.
    RightOne,
    /// (x, y) = (y⁻¹, x).
    Swap,
}

impl SymbolRelation {
    pub fn label(&self) -> &'static str {
        match self {
            SymbolRelation::A => "(a)",
            SymbolRelation::B => "(b)",
            SymbolRelation::C => "(c)",
            SymbolRelation::D => "(d)",
            SymbolRelation::E => "(e)",
            SymbolRelation::G => "(g)",
            SymbolRelation::Steinberg => "(x,1-x)",
            SymbolRelation::LeftOne => "(1,x)",
            SymbolRelation::RightOne => "(x,1)",
            SymbolRelation::Swap => "(x,y)=(1/y,x)",
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            SymbolRelation::A => "(x,y)(xy,z) = (x,yz)(y,z)",
            SymbolRelation::B => "(1,1) = 1",
            SymbolRelation::C => "(x,y) = (1/x,1/y)",
            SymbolRelation::D => "(x,y) = (x,-xy)",
            SymbolRelation::E => "(x,y) = (x,(1-x)y)",
            SymbolRelation::G => "(x,yz) = (x,y)(x,z) and (xy,z) = (x,z)(y,z)",
            SymbolRelation::Steinberg => "(x,1-x) = 1",
            SymbolRelation::LeftOne => "(1,x) = 1",
            SymbolRelation::RightOne => "(x,1) = 1",
            SymbolRelation::Swap => "(x,y) = (1/y,x)",
        }
    }

    /// Relations imposed for C_ℓ.
    pub const SYMPLECTIC: [SymbolRelation; 5] =
        [SymbolRelation::A, SymbolRelation::B, SymbolRelation::C, SymbolRelation::D, SymbolRelation::E];
    /// Relations imposed for nonsymplectic systems.
    pub const NONSYMPLECTIC: [SymbolRelation; 4] =
        [SymbolRelation::A, SymbolRelation::D, SymbolRelation::E, SymbolRelation::G];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationOutcome {
    pub relation: SymbolRelation,
    pub checked: usize,
    pub skipped: usize,
    /// First failing sample.
    pub witness: Option<String>,
}

impl RelationOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} {} {} [checked {}, skipped {}]",
            self.relation.label(),
            self.relation.statement(),
            self.checked,
            self.skipped
        );
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness {w}"));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub model: String,
    pub outcomes: Vec<RelationOutcome>,
}

impl RelationReport {
    pub fn outcome(&self, r: SymbolRelation) -> Option<&RelationOutcome> {
        self.outcomes.iter().find(|o| o.relation == r)
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(RelationOutcome::passed)
    }

    pub fn holds_all(&self, set: &[SymbolRelation]) -> bool {
        set.iter().all(|r| self.outcome(*r).is_some_and(|o| o.passed() && o.checked > 0))
    }

    pub fn lines(&self) -> Vec<String> {
        self.outcomes.iter().map(RelationOutcome::line).collect()
    }
}

struct Tally {
    relation: SymbolRelation,
    checked: usize,
    skipped: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(relation: SymbolRelation) -> Self {
        Tally { relation, checked: 0, skipped: 0, witness: None }
    }

    fn record(&mut self, ok: Option<bool>, describe: impl FnOnce() -> String) {
        match ok {
            None => self.skipped += 1,
            Some(ok) => {
                self.checked += 1;
                if !ok && self.witness.is_none() {
                    self.witness = Some(describe());
                }
            }
        }
    }

    fn finish(self) -> RelationOutcome {
        RelationOutcome { relation: self.relation, checked: self.checked, skipped: self.skipped, witness: self.witness }
    }
}

/// Relations (a)–(e), (g) and (x, 1-x) = 1 on every sample triple.
pub fn check_symbol_relations<M: SymbolModel>(model: &M, samples: &[(Rational, Rational, Rational)]) -> RelationReport {
    let one = Rational::one();
    let s = |a: &Rational, b: &Rational| model.symbol(a, b);
    let m = |a: M::Value, b: M::Value| model.mul(&a, &b);
    let mut tallies: Vec<Tally> = [
        SymbolRelation::A,
        SymbolRelation::B,
        SymbolRelation::C,
        SymbolRelation::D,
        SymbolRelation::E,
        SymbolRelation::G,
        SymbolRelation::Steinberg,
    ]
    .into_iter()
    .map(Tally::new)
    .collect();

    let b = s(&one, &one).map(|v| v == model.one());
    tallies[1].record(b, || "(1,1) != 1".into());

    for (x, y, z) in samples {
        let show = || format!("x={x} y={y} z={z}");
        let a = (|| {
            let lhs = m(s(x, y)?, s(&(x * y), z)?);
            let rhs = m(s(x, &(y * z))?, s(y, z)?);
            Some(lhs == rhs)
        })();
        tallies[0].record(a, show);

        let c = (|| Some(s(x, y)? == s(&x.recip()?, &y.recip()?)?))();
        tallies[2].record(c, show);

        let d = (|| Some(s(x, y)? == s(x, &(-&(x * y)))?))();
        tallies[3].record(d, show);

        let e = (|| {
            let one_minus_x = &one - x;
            if one_minus_x.is_zero() {
                return None;
            }
            Some(s(x, y)? == s(x, &(&one_minus_x * y))?)
        })();
        tallies[4].record(e, show);

        let g = (|| {
            let right = s(x, &(y * z))? == m(s(x, y)?, s(x, z)?);
            let left = s(&(x * y), z)? == m(s(x, z)?, s(y, z)?);
            Some(right && left)
        })();
        tallies[5].record(g, show);

        let st = (|| {
            let one_minus_x = &one - x;
            if one_minus_x.is_zero() {
                return None;
            }
            Some(s(x, &one_minus_x)? == model.one())
        })();
        tallies[6].record(st, show);
    }
    RelationReport { model: model.name(), outcomes: tallies.into_iter().map(Tally::finish).collect() }
}

/// (1, x) = (x, 1) = 1 and (x, y) = (y⁻¹, x).
pub fn derived_symbol_identities<M: SymbolModel>(
    model: &M,
    samples: &[(Rational, Rational, Rational)],
) -> RelationReport {
    let one = Rational::one();
    let mut left = Tally::new(SymbolRelation::LeftOne);
    let mut right = Tally::new(SymbolRelation::RightOne);
    let mut swap = Tally::new(SymbolRelation::Swap);
    for (x, y, _) in samples {
        let show = || format!("x={x} y={y}");
        left.record(model.symbol(&one, x).map(|v| v == model.one()), show);
        right.record(model.symbol(x, &one).map(|v| v == model.one()), show);
        let sw = (|| Some(model.symbol(x, y)? == model.symbol(&y.recip()?, x)?))();
        swap.record(sw, show);
    }
    RelationReport { model: model.name(), outcomes: vec![left.finish(), right.finish(), swap.finish()] }
}

/// Random nonzero rationals ±p^k·n/d with |n|, d ≤ bound and |k| ≤ 2.
pub fn sample_triples<G: Rng>(rng: &mut G, count: usize, bound: i64, p: u64) -> Vec<(Rational, Rational, Rational)> {
    let mut draw = || {
        let n = loop {
            let n = rng.gen_range(-bound..=bound);
            if n != 0 {
                break n;
            }
        };
        let d = rng.gen_range(1..=bound);
        let k = rng.gen_range(-2i32..=2);
        let base = Rational::frac(n, d);
        let pk = Rational::from_int(p as i64).powi(k).expect("p is nonzero");
        &base * &pk
    };
    (0..count).map(|_| (draw(), draw(), draw())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn worked_values() {
        let t3 = TameSymbol::new(3).unwrap();
        assert_eq!(t3.symbol(&Rational::from_int(3), &Rational::from_int(3)), Some(2));
        let t5 = TameSymbol::new(5).unwrap();
        assert_eq!(t5.symbol(&Rational::from_int(5), &Rational::from_int(2)), Some(3));
        let t7 = TameSymbol::new(7).unwrap();
        assert_eq!(t7.symbol(&Rational::one(), &Rational::from_int(7)), Some(1));
        assert_eq!(t7.symbol(&Rational::zero(), &Rational::one()), None);
        assert!(TameSymbol::new(9).is_err());
    }

    #[test]
    fn relations_hold_for_small_primes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2, 3, 5, 7] {
            let model = TameSymbol::new(p).unwrap();
            let samples = sample_triples(&mut rng, 100, 20, p);
            let rep = check_symbol_relations(&model, &samples);
            assert!(rep.all_passed(), "{:?}", rep.lines());
            assert!(rep.holds_all(&SymbolRelation::SYMPLECTIC));
            assert!(rep.holds_all(&SymbolRelation::NONSYMPLECTIC));
            assert!(derived_symbol_identities(&model, &samples).all_passed());
        }
    }

    #[test]
    fn broken_model_is_caught() {
        struct Constant;
        impl SymbolModel for Constant {
            type Value = i64;
            fn name(&self) -> String {
                "constant -1".into()
            }
            fn symbol(&self, _: &Rational, _: &Rational) -> Option<i64> {
                Some(-1)
            }
            fn mul(&self, a: &i64, b: &i64) -> i64 {
                a * b
            }
            fn one(&self) -> i64 {
                1
            }
        }
        let samples = vec![(Rational::from_int(2), Rational::from_int(3), Rational::from_int(5))];
        let rep = check_symbol_relations(&Constant, &samples);
        assert!(rep.outcome(SymbolRelation::A).unwrap().passed());
        assert!(!rep.outcome(SymbolRelation::B).unwrap().passed());
        assert!(!rep.outcome(SymbolRelation::G).unwrap().passed());
        assert!(!rep.holds_all(&SymbolRelation::NONSYMPLECTIC));
        assert!(rep.lines()[1].starts_with("FAIL (b)"));
    }
}
