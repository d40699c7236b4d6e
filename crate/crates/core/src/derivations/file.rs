//! Plain-text descriptions of an algebra and a list of points.
//!
//! ```text
//! # the cuspidal cubic
//! base Q
//! vars X Y
//! relation X^3 - Y^2
//! mode relative
//! point X=0 Y=0 expect 2
//! point X=1 Y=1 expect 1
//! ```
//!
//! `base` is `Q`, `Z`, or `Z[w] <minimal polynomial in w>`. Point values are
//! polynomials in the generator, so `X=w+1` is allowed over `Z[w]`; the
//! generator defaults to itself in Q(w).

use std::fmt;

use crate::kernel::{Assignment, Field, MultiPoly, NumberField, NumberFieldElement, Rational};

use super::{der_dim, leibniz_check, AlgebraAtPoint, BaseRing, DerivationError, Mode};

#[derive(Clone, Debug, PartialEq)]
pub struct CurvePoint {
    pub line: usize,
    pub values: Vec<(String, String)>,
    pub expect: Option<usize>,
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveFile {
    pub base: BaseRing,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub mode: Mode,
    pub points: Vec<CurvePoint>,
}

/// Result of one `point` line.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveOutcome {
    pub point: String,
    pub expected: Option<usize>,
    pub dimension: Option<usize>,
    pub jacobian_rank: Option<usize>,
    pub leibniz: bool,
    /// der_dim after inverting 1 + Σ X_i², which is nonzero at rational points.
    pub localized_dimension: Option<usize>,
    /// (relative, absolute) dimensions.
    pub mode_dimensions: Option<(usize, usize)>,
    pub error: Option<String>,
}

impl CurveOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.leibniz && (self.expected.is_none() || self.expected == self.dimension)
    }
}

impl fmt::Display for CurveOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(e) = &self.error {
            return write!(f, "{}: error: {e}", self.point);
        }
        write!(
            f,
            "{}: der_dim {} (jacobian rank {})",
            self.point,
            self.dimension.unwrap_or(0),
            self.jacobian_rank.unwrap_or(0)
        )?;
        if let Some(k) = self.expected {
            write!(f, ", expected {k}")?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> DerivationError {
    DerivationError::Parse { line, msg: msg.into() }
}

fn parse_base(line: usize, rest: &str) -> Result<BaseRing, DerivationError> {
    let rest = rest.trim();
    match rest {
        "Q" => return Ok(BaseRing::Rationals),
        "Z" => return Ok(BaseRing::Integers),
        _ => {}
    }
    let inner = rest
        .strip_prefix("Z[")
        .and_then(|r| r.split_once(']'))
        .ok_or_else(|| parse_err(line, format!("unknown base ring {rest:?}")))?;
    let (generator, poly) = (inner.0.trim(), inner.1.trim());
    if generator.is_empty() || poly.is_empty() {
        return Err(parse_err(line, "expected Z[w] followed by a minimal polynomial"));
    }
    let vars = MultiPoly::variables(&[generator]);
    let m = MultiPoly::parse(poly, &vars).map_err(|e| parse_err(line, e.to_string()))?;
    let deg = m.total_degree().unwrap_or(0) as usize;
    let mut minpoly = vec![Rational::zero(); deg + 1];
    for (mono, c) in m.terms() {
        minpoly[mono.0[0] as usize] = c.clone();
    }
    NumberField::new(generator, minpoly.clone()).map_err(|e| parse_err(line, e.to_string()))?;
    Ok(BaseRing::NumberRing { generator: generator.to_string(), minpoly })
}

impl CurveFile {
    pub fn parse(src: &str) -> Result<Self, DerivationError> {
        let mut base = None;
        let mut vars = None;
        let mut relations = Vec::new();
        let mut mode = Mode::Relative;
        let mut points = Vec::new();
        for (idx, raw) in src.lines().enumerate() {
            let line = idx + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let (key, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
            match key {
                "base" => base = Some(parse_base(line, rest)?),
                "vars" => vars = Some(rest.split_whitespace().map(str::to_string).collect::<Vec<_>>()),
                "relation" => relations.push(rest.trim().to_string()),
                "mode" => {
                    mode = match rest.trim() {
                        "relative" => Mode::Relative,
                        "absolute" => Mode::Absolute,
                        other => return Err(parse_err(line, format!("unknown mode {other:?}"))),
                    }
                }
                "point" => {
                    let mut values = Vec::new();
                    let mut expect = None;
                    let mut tokens = rest.split_whitespace();
                    while let Some(tok) = tokens.next() {
                        if tok == "expect" {
                            let k = tokens
                                .next()
                                .and_then(|k| k.parse().ok())
                                .ok_or_else(|| parse_err(line, "expect needs a dimension"))?;
                            expect = Some(k);
                        } else {
                            let (k, v) = tok
                                .split_once('=')
                                .ok_or_else(|| parse_err(line, format!("expected name=value, got {tok:?}")))?;
                            values.push((k.to_string(), v.to_string()));
                        }
                    }
                    points.push(CurvePoint { line, values, expect });
                }
                other => return Err(parse_err(line, format!("unknown keyword {other:?}"))),
            }
        }
        let base = base.ok_or_else(|| parse_err(0, "missing base line"))?;
        let vars = vars.ok_or_else(|| parse_err(0, "missing vars line"))?;
        Ok(CurveFile { base, vars, relations, mode, points })
    }

    /// Compute der_dim at every point.
    pub fn run(&self) -> Vec<CurveOutcome> {
        match &self.base {
            BaseRing::NumberRing { generator, minpoly } => {
                let field = match NumberField::new(generator, minpoly.clone()) {
                    Ok(f) => f,
                    Err(e) => return self.points.iter().map(|p| failed(p, e.to_string())).collect(),
                };
                let w = NumberFieldElement::generator(&field);
                self.points.iter().map(|p| self.run_point(p, &w, Some(generator))).collect()
            }
            _ => self.points.iter().map(|p| self.run_point(p, &Rational::one(), None)).collect(),
        }
    }

    fn run_point<F: Field>(&self, p: &CurvePoint, gen: &F, generator: Option<&str>) -> CurveOutcome {
        match self.evaluate(p, gen, generator) {
            Ok(out) => out,
            Err(e) => failed(p, e.to_string()),
        }
    }

    fn evaluate<F: Field>(
        &self,
        p: &CurvePoint,
        gen: &F,
        generator: Option<&str>,
    ) -> Result<CurveOutcome, DerivationError> {
        let names: Vec<&str> = generator.into_iter().collect();
        let value_vars = MultiPoly::variables(&names);
        let mut at = Assignment::<F>::new();
        if let Some(g) = generator {
            at.insert(g.to_string(), gen.clone());
        }
        let mut point = at.clone();
        for (k, v) in &p.values {
            let poly = MultiPoly::parse(v, &value_vars).map_err(|e| parse_err(p.line, e.to_string()))?;
            point.insert(k.clone(), poly.eval(&at, &gen.one_like())?);
        }
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let rels: Vec<&str> = self.relations.iter().map(String::as_str).collect();
        let problem = AlgebraAtPoint::new(self.base.clone(), &vars, &rels, point, gen)?;
        let space = der_dim(&problem, self.mode)?;
        let leibniz = leibniz_check(&problem, &space)?;
        let h: Vec<String> = self.vars.iter().map(|v| format!("{v}^2")).collect();
        let localized_dimension = match problem.localize(&format!("1 + {}", h.join(" + "))) {
            Ok(loc) => Some(der_dim(&loc, self.mode)?.dimension()),
            Err(DerivationError::NotInvertibleAtPoint(_)) => None,
            Err(e) => return Err(e),
        };
        let relative = der_dim(&problem, Mode::Relative)?.dimension();
        let absolute = der_dim(&problem, Mode::Absolute)?.dimension();
        Ok(CurveOutcome {
            point: p.to_string(),
            expected: p.expect,
            dimension: Some(space.dimension()),
            jacobian_rank: Some(space.jacobian_rank),
            leibniz,
            localized_dimension,
            mode_dimensions: Some((relative, absolute)),
            error: None,
        })
    }
}

fn failed(p: &CurvePoint, error: String) -> CurveOutcome {
    CurveOutcome {
        point: p.to_string(),
        expected: p.expect,
        dimension: None,
        jacobian_rank: None,
        leibniz: false,
        localized_dimension: None,
        mode_dimensions: None,
        error: Some(error),
    }
}
