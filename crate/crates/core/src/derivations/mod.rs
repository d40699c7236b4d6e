//! Derivations R → K at a point g, for R = k[X₁..X_t]/(f₁..f_s).
//!
//! The space of g-derivations is the null space of the Jacobian of the
//! relations evaluated at g. In relative mode derivations vanish on the base
//! ring; in absolute mode the generator of a number ring becomes an extra
//! column and its minimal polynomial an extra row.

mod file;

pub use file::{CurveFile, CurveOutcome, CurvePoint};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::kernel::{rref, Assignment, Field, KernelError, Matrix, MultiPoly, Rational, Ring};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DerivationError {
    #[error("{0}")]
    InvalidPoint(String),
    #[error("variable {0} is declared twice")]
    DuplicateVariable(String),
    #[error("{0} vanishes at the point, so it cannot be inverted")]
    NotInvertibleAtPoint(String),
    #[error("curve file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// The base ring k: Z, Q, or Z[w] with w a root of a monic integer polynomial
/// (ascending coefficients).
#[derive(Clone, Debug, PartialEq)]
pub enum BaseRing {
    Integers,
    Rationals,
    NumberRing { generator: String, minpoly: Vec<Rational> },
}

impl BaseRing {
    pub fn generator(&self) -> Option<&str> {
        match self {
            BaseRing::NumberRing { generator, .. } => Some(generator),
            _ => None,
        }
    }

    /// m(w) as a polynomial in the generator.
    fn minpoly_in(&self, vars: &Arc<Vec<String>>) -> Result<Option<MultiPoly>, KernelError> {
        let BaseRing::NumberRing { generator, minpoly } = self else {
            return Ok(None);
        };
        let w = MultiPoly::var(vars, generator)?;
        let mut acc = MultiPoly::zero(vars);
        for (k, c) in minpoly.iter().enumerate() {
            acc = acc.add(&w.pow(k as u32).scale(c));
        }
        Ok(Some(acc))
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => f.write_str("Z"),
            BaseRing::Rationals => f.write_str("Q"),
            BaseRing::NumberRing { generator, .. } => write!(f, "Z[{generator}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Der_k: derivations vanishing on the base ring.
    Relative,
    /// Der: all derivations.
    Absolute,
}

/// A finitely presented algebra with a K-point g on which all relations vanish.
#[derive(Clone, Debug)]
pub struct AlgebraAtPoint<F: Field> {
    base: BaseRing,
    vars: Vec<String>,
    ring_vars: Arc<Vec<String>>,
    relations: Vec<MultiPoly>,
    point: Assignment<F>,
    unit: F,
}

impl<F: Field> AlgebraAtPoint<F> {
    /// `relations` are parsed over the base generator (if any) and `vars`.
    pub fn new(
        base: BaseRing,
        vars: &[&str],
        relations: &[&str],
        point: Assignment<F>,
        unit: &F,
    ) -> Result<Self, DerivationError> {
        let mut names: Vec<String> = base.generator().map(str::to_string).into_iter().collect();
        for v in vars {
            if names.iter().any(|n| n == v) {
                return Err(DerivationError::DuplicateVariable(v.to_string()));
            }
            names.push(v.to_string());
        }
        let ring_vars = MultiPoly::variables(&names);
        let relations = relations.iter().map(|r| MultiPoly::parse(r, &ring_vars)).collect::<Result<Vec<_>, _>>()?;
        Self::from_parts(base, vars.iter().map(|s| s.to_string()).collect(), ring_vars, relations, point, unit)
    }

    fn from_parts(
        base: BaseRing,
        vars: Vec<String>,
        ring_vars: Arc<Vec<String>>,
        relations: Vec<MultiPoly>,
        point: Assignment<F>,
        unit: &F,
    ) -> Result<Self, DerivationError> {
        for name in ring_vars.iter() {
            if !point.contains_key(name) {
                return Err(DerivationError::InvalidPoint(format!("no value for {name}")));
            }
        }
        let problem = AlgebraAtPoint { base, vars, ring_vars, relations, point, unit: unit.one_like() };
        if let Some(m) = problem.base.minpoly_in(&problem.ring_vars)? {
            if !m.eval(&problem.point, &problem.unit)?.is_zero() {
                return Err(DerivationError::InvalidPoint(format!(
                    "{} is not a root of {m}",
                    problem.point[problem.base.generator().expect("number ring")]
                )));
            }
        }
        for f in &problem.relations {
            let v = f.eval(&problem.point, &problem.unit)?;
            if !v.is_zero() {
                return Err(DerivationError::InvalidPoint(format!("relation {f} takes the value {v} at the point")));
            }
        }
        Ok(problem)
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[MultiPoly] {
        &self.relations
    }

    pub fn point(&self) -> &Assignment<F> {
        &self.point
    }

    fn columns(&self, mode: Mode) -> Vec<String> {
        let mut cols = Vec::new();
        if mode == Mode::Absolute {
            if let Some(g) = self.base.generator() {
                cols.push(g.to_string());
            }
        }
        cols.extend(self.vars.iter().cloned());
        cols
    }

    fn rows(&self, mode: Mode) -> Result<Vec<MultiPoly>, KernelError> {
        let mut rows = self.relations.clone();
        if mode == Mode::Absolute {
            if let Some(m) = self.base.minpoly_in(&self.ring_vars)? {
                rows.push(m);
            }
        }
        Ok(rows)
    }

    /// Jacobian ∂f_i/∂c_j at g over the columns of `mode`.
    pub fn jacobian(&self, mode: Mode) -> Result<Vec<Vec<F>>, DerivationError> {
        let cols = self.columns(mode);
        self.rows(mode)?
            .iter()
            .map(|f| {
                cols.iter()
                    .map(|c| Ok(f.partial(c)?.eval(&self.point, &self.unit)?))
                    .collect::<Result<Vec<F>, DerivationError>>()
            })
            .collect()
    }

    /// Add a variable Z with relation Z·h - 1, placed at Z = 1/h(g).
    pub fn localize(&self, h: &str) -> Result<Self, DerivationError> {
        let mut z = "Z".to_string();
        while self.ring_vars.contains(&z) {
            z.push('_');
        }
        let mut names = (*self.ring_vars).clone();
        names.push(z.clone());
        let ring_vars = MultiPoly::variables(&names);
        let h_poly = MultiPoly::parse(h, &self.ring_vars)?;
        let value = h_poly.eval(&self.point, &self.unit)?;
        let inv = value.inv().ok_or_else(|| DerivationError::NotInvertibleAtPoint(h_poly.to_string()))?;
        let h_big = h_poly.with_variables(&ring_vars)?;
        let zp = MultiPoly::var(&ring_vars, &z)?;
        let mut relations =
            self.relations.iter().map(|f| f.with_variables(&ring_vars)).collect::<Result<Vec<_>, _>>()?;
        relations.push(zp.mul(&h_big).sub(&zp.one_like()));
        let mut point = self.point.clone();
        point.insert(z.clone(), inv);
        let mut vars = self.vars.clone();
        vars.push(z);
        Self::from_parts(self.base.clone(), vars, ring_vars, relations, point, &self.unit)
    }
}

/// Basis of the g-derivations by their values on `columns`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivationSpace<F> {
    pub mode: Mode,
    pub columns: Vec<String>,
    pub jacobian_rank: usize,
    pub basis: Vec<Vec<F>>,
}

impl<F> DerivationSpace<F> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub fn der_dim<F: Field>(problem: &AlgebraAtPoint<F>, mode: Mode) -> Result<DerivationSpace<F>, DerivationError> {
    let columns = problem.columns(mode);
    let jac = problem.jacobian(mode)?;
    let t = columns.len();
    let (jacobian_rank, basis) = if jac.is_empty() || t == 0 {
        let basis = (0..t)
            .map(|i| {
                let mut v = vec![problem.unit.zero_like(); t];
                v[i] = problem.unit.one_like();
                v
            })
            .collect();
        (0, basis)
    } else {
        let r = rref(&Matrix::from_rows(jac)?)?;
        (r.rank, r.nullspace)
    };
    Ok(DerivationSpace { mode, columns, jacobian_rank, basis })
}

/// δ(f) computed from δ on the variables by the Leibniz rule, one factor at a time.
fn apply_derivation<F: Field>(
    f: &MultiPoly,
    point: &Assignment<F>,
    delta: &Assignment<F>,
    unit: &F,
) -> Result<F, DerivationError> {
    let vars = f.vars();
    let mut total = unit.zero_like();
    for (m, c) in f.terms() {
        // (g(u), δ(u)) for the partial product u
        let mut g_val = unit.from_rational_like(c);
        let mut d_val = unit.zero_like();
        for (k, &e) in m.0.iter().enumerate() {
            let name = &vars[k];
            for _ in 0..e {
                let gx = point.get(name).ok_or_else(|| KernelError::UnassignedVariable(name.clone()))?;
                let dx = delta.get(name).cloned().unwrap_or_else(|| unit.zero_like());
                d_val = d_val.mul(gx).add(&g_val.mul(&dx));
                g_val = g_val.mul(gx);
            }
        }
        total = total.add(&d_val);
    }
    Ok(total)
}

/// Each basis derivation kills every relation (and the minimal polynomial in
/// absolute mode), checked by the Leibniz rule rather than the Jacobian.
pub fn leibniz_check<F: Field>(
    problem: &AlgebraAtPoint<F>,
    space: &DerivationSpace<F>,
) -> Result<bool, DerivationError> {
    let rows = problem.rows(space.mode)?;
    for v in &space.basis {
        let delta: Assignment<F> = space.columns.iter().cloned().zip(v.iter().cloned()).collect();
        for f in &rows {
            if !apply_derivation(f, &problem.point, &delta, &problem.unit)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RigidityReport<F> {
    /// m'(θ), absent for O = Z.
    pub derivative_at_root: Option<F>,
    /// Der^g(O, K) = 0.
    pub rigid: bool,
}

/// Der^g(O, K) = 0 because m'(θ) ≠ 0 forces δ(w) = 0.
pub fn number_ring_rigidity<F: Field>(base: &BaseRing, root: Option<&F>) -> Result<RigidityReport<F>, DerivationError> {
    let BaseRing::NumberRing { generator, minpoly } = base else {
        return Ok(RigidityReport { derivative_at_root: None, rigid: true });
    };
    let theta = root.ok_or_else(|| DerivationError::InvalidPoint(format!("no value for {generator}")))?;
    let vars = MultiPoly::variables(&[generator.as_str()]);
    let m = base.minpoly_in(&vars)?.expect("number ring");
    let at: Assignment<F> = [(generator.clone(), theta.clone())].into_iter().collect();
    if !m.eval(&at, theta)?.is_zero() {
        return Err(DerivationError::InvalidPoint(format!("{theta} is not a root of {m}")));
    }
    let d = m.partial(generator)?.eval(&at, theta)?;
    let rigid = !d.is_zero() && minpoly.len() > 1;
    Ok(RigidityReport { derivative_at_root: Some(d), rigid })
}

/// One sampled point of a plane curve.
#[derive(Clone, Debug, PartialEq)]
pub struct PointReport {
    pub point: (Rational, Rational),
    pub on_curve: bool,
    pub jacobian_rank: usize,
    pub der_dim: usize,
    pub smooth: bool,
}

impl PointReport {
    /// Smooth points must have dimension 1.
    pub fn consistent(&self) -> bool {
        !self.on_curve || !self.smooth || self.der_dim == 1
    }
}

/// Jacobian rank and der_dim over Q at each sampled point of f(X, Y) = 0.
pub fn smoothness_scan(f: &str, points: &[(Rational, Rational)]) -> Result<Vec<PointReport>, DerivationError> {
    let mut out = Vec::with_capacity(points.len());
    for (x, y) in points {
        let point: Assignment<Rational> =
            [("X".to_string(), x.clone()), ("Y".to_string(), y.clone())].into_iter().collect();
        match AlgebraAtPoint::new(BaseRing::Rationals, &["X", "Y"], &[f], point, &Rational::one()) {
            Ok(p) => {
                let space = der_dim(&p, Mode::Relative)?;
                out.push(PointReport {
                    point: (x.clone(), y.clone()),
                    on_curve: true,
                    jacobian_rank: space.jacobian_rank,
                    der_dim: space.dimension(),
                    smooth: space.jacobian_rank == 1,
                });
            }
            Err(DerivationError::InvalidPoint(_)) => out.push(PointReport {
                point: (x.clone(), y.clone()),
                on_curve: false,
                jacobian_rank: 0,
                der_dim: 0,
                smooth: false,
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
