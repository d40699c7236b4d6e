//! Structure constants N^{i,j}_{α,β}, inferred from the matrix models.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::kernel::{MultiPoly, Ring};
use crate::rings::Trunc;
use crate::rootsys::{Root, RootKind};

use super::{ChevalleyError, ChevalleyModel, GroupElement};

/// One factor e_γ(N s^i t^j) of a commutator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub i: u32,
    pub j: u32,
    pub root: Root,
    pub n: i64,
}

/// Every admissible ordered pair (α, β) with its (possibly empty) list of
/// factors in root-string order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    kind: RootKind,
    table: BTreeMap<(Root, Root), Vec<Term>>,
}

impl StructureConstants {
    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn terms(&self, alpha: &Root, beta: &Root) -> Option<&[Term]> {
        self.table.get(&(alpha.clone(), beta.clone())).map(Vec::as_slice)
    }

    pub fn get(&self, alpha: &Root, beta: &Root, i: u32, j: u32) -> Option<i64> {
        self.terms(alpha, beta)?.iter().find(|t| t.i == i && t.j == j).map(|t| t.n)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(Root, Root), &Vec<Term>)> {
        self.table.iter()
    }

    pub fn nonempty_pairs(&self) -> usize {
        self.table.values().filter(|v| !v.is_empty()).count()
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.table.values().flatten().map(|t| t.n)
    }

    /// `alpha beta i j N`, one line per factor.
    pub fn to_text(&self) -> String {
        let mut out = format!("# structure constants N(alpha, beta, i, j)\nsystem {}\n", self.kind);
        for ((a, b), terms) in &self.table {
            for t in terms {
                writeln!(out, "{a} {b} {} {} {}", t.i, t.j, t.n).expect("write to string");
            }
        }
        out
    }

    /// Read the text form and check it covers exactly the root strings of `model`.
    pub fn from_text(model: &ChevalleyModel, text: &str) -> Result<Self, ChevalleyError> {
        let sys = model.system();
        let mut given: BTreeMap<(Root, Root, u32, u32), i64> = BTreeMap::new();
        let mut kind = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let bad = |msg: &str| ChevalleyError::Golden { line: lineno + 1, msg: msg.to_string() };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            if f[0] == "system" {
                let k: RootKind = f.get(1).ok_or_else(|| bad("missing system name"))?.parse()?;
                kind = Some(k);
                continue;
            }
            if f.len() != 5 {
                return Err(bad("expected 5 fields"));
            }
            let a = sys.parse_root(f[0])?;
            let b = sys.parse_root(f[1])?;
            let num = |s: &str| s.parse::<i64>().map_err(|_| bad("not an integer"));
            let (i, j, n) = (num(f[2])?, num(f[3])?, num(f[4])?);
            if i < 1 || j < 1 {
                return Err(bad("exponents must be positive"));
            }
            if given.insert((a, b, i as u32, j as u32), n).is_some() {
                return Err(bad("duplicate entry"));
            }
        }
        if kind != Some(model.kind()) {
            return Err(ChevalleyError::Golden { line: 0, msg: format!("system line must name {}", model.kind()) });
        }
        let mut table = BTreeMap::new();
        for (a, b) in sys.admissible_pairs() {
            let string = sys.root_string(&a, &b)?;
            let mut terms = Vec::new();
            for t in string.terms {
                let n = given.remove(&(a.clone(), b.clone(), t.i, t.j)).ok_or_else(|| ChevalleyError::Golden {
                    line: 0,
                    msg: format!("missing entry {a} {b} {} {}", t.i, t.j),
                })?;
                terms.push(Term { i: t.i, j: t.j, root: t.root, n });
            }
            table.insert((a, b), terms);
        }
        if let Some(((a, b, i, j), _)) = given.into_iter().next() {
            return Err(ChevalleyError::Golden { line: 0, msg: format!("{a} {b} {i} {j} is not in a root string") });
        }
        Ok(StructureConstants { kind: model.kind(), table })
    }
}

/// Frozen tables shipped with the crate, keyed by system name.
pub fn golden_text(kind: RootKind) -> Option<&'static str> {
    match kind {
        RootKind::A(2) => Some(include_str!("../../golden/structure_constants_A2.txt")),
        RootKind::A(3) => Some(include_str!("../../golden/structure_constants_A3.txt")),
        RootKind::C2 => Some(include_str!("../../golden/structure_constants_C2.txt")),
        _ => None,
    }
}

const SEARCH: [i64; 8] = [1, -1, 2, -2, 3, -3, 4, -4];

/// Infer the constants by expanding [e_α(s), e_β(t)] with `s`, `t` generic
/// elements of some ring and peeling off the factors of each root string.
pub fn infer_structure_constants_over<R: Ring>(
    model: &ChevalleyModel,
    s: &R,
    t: &R,
) -> Result<StructureConstants, ChevalleyError> {
    let sys = model.system();
    let mut table = BTreeMap::new();
    for (a, b) in sys.admissible_pairs() {
        let string = sys.root_string(&a, &b)?;
        let comm = model.e(&a, s)?.commutator(&model.e(&b, t)?);
        let mut product = model.identity(s);
        let mut terms = Vec::new();
        for term in &string.terms {
            // Distinct roots occupy distinct matrix positions, so the
            // coefficient of X_γ can be read at any entry of its support.
            let &(p, q, v) = model.entries(&term.root)?.first().expect("root vectors are nonzero");
            let c = comm.matrix().get(p, q).mul(&s.from_int_like(v));
            let monomial = s.pow(term.i).mul(&t.pow(term.j));
            let n = SEARCH.iter().copied().find(|&n| monomial.mul(&s.from_int_like(n)) == c).ok_or_else(|| {
                ChevalleyError::ModelInconsistency(format!(
                    "coefficient {c} of {} in [e({a}), e({b})] is not an integer multiple of s^{} t^{}",
                    term.root, term.i, term.j
                ))
            })?;
            product = product.mul(&model.e(&term.root, &c)?);
            terms.push(Term { i: term.i, j: term.j, root: term.root.clone(), n });
        }
        if product != comm {
            return Err(ChevalleyError::ModelInconsistency(format!(
                "[e({a}), e({b})] is not the product over its root string"
            )));
        }
        table.insert((a, b), terms);
    }
    Ok(StructureConstants { kind: model.kind(), table })
}

/// Inference with formal s, t over Q.
pub fn infer_structure_constants(model: &ChevalleyModel) -> Result<StructureConstants, ChevalleyError> {
    let vars = MultiPoly::variables(&["s", "t"]);
    let s = MultiPoly::var(&vars, "s")?;
    let t = MultiPoly::var(&vars, "t")?;
    infer_structure_constants_over(model, &s, &t)
}

/// Inference over Q[ε]/(ε^d) with s = Σ s_k ε^k and t = Σ t_k ε^k formal.
pub fn infer_structure_constants_trunc(model: &ChevalleyModel, d: usize) -> Result<StructureConstants, ChevalleyError> {
    let (s, t) = formal_trunc_pair(d)?;
    infer_structure_constants_over(model, &s, &t)
}

/// s = Σ s_k ε^k and t = Σ t_k ε^k with formal coefficients.
pub fn formal_trunc_pair(d: usize) -> Result<(Trunc<MultiPoly>, Trunc<MultiPoly>), ChevalleyError> {
    crate::rings::TruncAlgebra::new(d)?;
    let names: Vec<String> = ["s", "t"].iter().flat_map(|p| (0..d).map(move |k| format!("{p}{k}"))).collect();
    let vars = MultiPoly::variables(&names);
    let make = |p: &str| -> Result<Trunc<MultiPoly>, ChevalleyError> {
        let coeffs = (0..d).map(|k| MultiPoly::var(&vars, &format!("{p}{k}"))).collect::<Result<Vec<_>, _>>()?;
        let like = coeffs[0].clone();
        Ok(Trunc::padded(d, coeffs, &like))
    };
    Ok((make("s")?, make("t")?))
}

#[derive(Clone, Debug)]
pub struct CommutatorReport<R: Ring> {
    pub alpha: Root,
    pub beta: Root,
    pub lhs: GroupElement<R>,
    pub rhs: GroupElement<R>,
    pub holds: bool,
}

/// Compare [e_α(s), e_β(t)] with ∏ e_{iα+jβ}(N s^i t^j) in the stored order.
pub fn verify_commutator<R: Ring>(
    model: &ChevalleyModel,
    constants: &StructureConstants,
    alpha: &Root,
    beta: &Root,
    s: &R,
    t: &R,
) -> Result<CommutatorReport<R>, ChevalleyError> {
    if *beta == alpha.neg() {
        return Err(ChevalleyError::OppositeRoots);
    }
    let terms = constants
        .terms(alpha, beta)
        .ok_or_else(|| ChevalleyError::ModelInconsistency(format!("no entry for ({alpha}, {beta})")))?;
    let lhs = model.e(alpha, s)?.commutator(&model.e(beta, t)?);
    let mut rhs = model.identity(s);
    for term in terms {
        let c = s.pow(term.i).mul(&t.pow(term.j)).mul(&s.from_int_like(term.n));
        rhs = rhs.mul(&model.e(&term.root, &c)?);
    }
    let holds = lhs == rhs;
    Ok(CommutatorReport { alpha: alpha.clone(), beta: beta.clone(), lhs, rhs, holds })
}
