//! Root systems of type A_ℓ (ℓ ≥ 2) and C₂ in their standard realizations.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("unsupported root system type {0}")]
    Unsupported(String),
    #[error("rank must be at least 2, got A{0}")]
    RankTooSmall(usize),
    #[error("beta = -alpha is excluded")]
    OppositeRoots,
    #[error("{0} is not a root of {1}")]
    NotARoot(String, String),
    #[error("cannot parse root {0:?}")]
    Parse(String),
}

/// A_ℓ or C₂. B₂ parses to C₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    A(usize),
    C2,
}

impl RootKind {
    pub fn a(l: usize) -> Result<Self, RootError> {
        if l < 2 {
            return Err(RootError::RankTooSmall(l));
        }
        Ok(RootKind::A(l))
    }

    pub fn rank(&self) -> usize {
        match self {
            RootKind::A(l) => *l,
            RootKind::C2 => 2,
        }
    }

    /// Length of the coordinate vectors.
    pub fn ambient_dim(&self) -> usize {
        match self {
            RootKind::A(l) => l + 1,
            RootKind::C2 => 2,
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::A(l) => write!(f, "A{l}"),
            RootKind::C2 => write!(f, "C2"),
        }
    }
}

impl FromStr for RootKind {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_uppercase();
        match t.as_str() {
            "C2" | "B2" => return Ok(RootKind::C2),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix('A') {
            if let Ok(l) = rest.parse::<usize>() {
                return RootKind::a(l);
            }
        }
        Err(RootError::Unsupported(s.trim().to_string()))
    }
}

/// Integer coordinate vector of a root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|c| k * c).collect())
    }

    /// iα + jβ.
    pub fn combine(i: i64, a: &Root, j: i64, b: &Root) -> Root {
        a.scale(i).add(&b.scale(j))
    }

    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|c| c * c).sum()
    }

    /// Nonzero coordinates as (index, value) pairs.
    pub fn support(&self) -> Vec<(usize, i64)> {
        self.0.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i, *c)).collect()
    }

    /// First nonzero coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|c| **c != 0).is_some_and(|c| *c > 0)
    }

    /// Parse `e1-e2`, `-e1+e3`, `2e1`, `-2e2`.
    pub fn parse(src: &str, dim: usize) -> Result<Root, RootError> {
        let err = || RootError::Parse(src.to_string());
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        let mut coords = vec![0i64; dim];
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let epos = body.find('e').ok_or_else(err)?;
            let k: i64 = if epos == 0 { 1 } else { body[..epos].parse().map_err(|_| err())? };
            let after = &body[epos + 1..];
            let end = after.find(['+', '-']).unwrap_or(after.len());
            let idx: usize = after[..end].parse().map_err(|_| err())?;
            if idx == 0 || idx > dim {
                return Err(err());
            }
            coords[idx - 1] += sign * k;
            rest = &after[end..];
        }
        let r = Root(coords);
        if r.0.iter().all(|c| *c == 0) {
            return Err(err());
        }
        Ok(r)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.support() {
            let mag = c.abs();
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    kind: RootKind,
    roots: Vec<Root>,
    simple: Vec<Root>,
}

impl RootSystem {
    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots.iter().filter(|r| r.is_positive()).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    /// Long roots exist only in C₂, where they are ±2e_i.
    pub fn is_long(&self, r: &Root) -> bool {
        match self.kind {
            RootKind::A(_) => false,
            RootKind::C2 => r.norm_sq() == 4,
        }
    }

    pub fn parse_root(&self, src: &str) -> Result<Root, RootError> {
        let r = Root::parse(src, self.kind.ambient_dim())?;
        if !self.contains(&r) {
            return Err(RootError::NotARoot(r.to_string(), self.kind.to_string()));
        }
        Ok(r)
    }

    /// Ordered pairs (α, β) with β ≠ −α.
    pub fn admissible_pairs(&self) -> Vec<(Root, Root)> {
        let mut out = Vec::new();
        for a in &self.roots {
            for b in &self.roots {
                if *b != a.neg() {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// Terms of iα + jβ that are roots, ascending in (i + j, i).
    pub fn root_string(&self, alpha: &Root, beta: &Root) -> Result<RootString, RootError> {
        for r in [alpha, beta] {
            if !self.contains(r) {
                return Err(RootError::NotARoot(r.to_string(), self.kind.to_string()));
            }
        }
        if *beta == alpha.neg() {
            return Err(RootError::OppositeRoots);
        }
        let mut terms = Vec::new();
        for total in 2..=6u32 {
            for i in 1..total {
                let j = total - i;
                let r = Root::combine(i as i64, alpha, j as i64, beta);
                if self.contains(&r) {
                    terms.push(RootStringTerm { i, j, root: r });
                }
            }
        }
        Ok(RootString { alpha: alpha.clone(), beta: beta.clone(), terms })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootStringTerm {
    pub i: u32,
    pub j: u32,
    pub root: Root,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootString {
    pub alpha: Root,
    pub beta: Root,
    pub terms: Vec<RootStringTerm>,
}

impl RootString {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

pub fn enumerate_roots(kind: RootKind) -> Result<RootSystem, RootError> {
    match kind {
        RootKind::A(l) => {
            if l < 2 {
                return Err(RootError::RankTooSmall(l));
            }
            let n = l + 1;
            let unit = |i: usize, j: usize| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                Root(v)
            };
            let mut roots = Vec::with_capacity(l * n);
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        roots.push(unit(i, j));
                    }
                }
            }
            let simple = (0..l).map(|i| unit(i, i + 1)).collect();
            Ok(RootSystem { kind, roots, simple })
        }
        RootKind::C2 => {
            let roots = [[1, -1], [-1, 1], [1, 1], [-1, -1], [2, 0], [-2, 0], [0, 2], [0, -2]]
                .iter()
                .map(|c| Root(c.to_vec()))
                .collect();
            let simple = vec![Root(vec![1, -1]), Root(vec![0, 2])];
            Ok(RootSystem { kind, roots, simple })
        }
    }
}
