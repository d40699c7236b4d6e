//! Suite reports and their text and JSON serializations.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use super::CliError;

/// Bumped whenever the JSON layout changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

/// Verdict of a hypothesis classifier attached to a check. A classifier
/// verdict does not change the check status; `expected` records whether the
/// verdict matches the golden expectation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classifier {
    pub hypothesis: String,
    pub verdict: Status,
    pub expected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classifier: Option<Classifier>,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::from_bool(ok),
            detail: detail.into(),
            witness: None,
            classifier: None,
        }
    }

    pub fn skip(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { status: Status::Skip, ..Check::new(name, true, detail) }
    }

    /// Attach a witness; the check fails whenever one is present.
    pub fn with_witness(mut self, witness: Option<String>) -> Self {
        if witness.is_some() {
            self.status = Status::Fail;
        }
        self.witness = witness;
        self
    }

    pub fn with_classifier(mut self, classifier: Classifier) -> Self {
        self.classifier = Some(classifier);
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub version: String,
    pub suite: String,
    pub seed: u64,
    pub summary: Summary,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, seed: u64, checks: Vec<Check>) -> Self {
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report {
            schema: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.to_string(),
            seed,
            summary,
            checks,
        }
    }

    /// Exit status 0 iff no check failed.
    pub fn success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "# chevkern {} suite {} seed {}", report.version, report.suite, report.seed);
            for c in &report.checks {
                let _ = write!(s, "{} {}: {}", c.status.as_str(), c.name, c.detail);
                if let Some(w) = &c.witness {
                    let _ = write!(s, " | witness: {w}");
                }
                if let Some(k) = &c.classifier {
                    let note = if k.expected { "expected" } else { "unexpected" };
                    let _ = write!(s, " | {}: {} ({note})", k.hypothesis, k.verdict.as_str());
                }
                s.push('\n');
            }
            let m = &report.summary;
            let _ = writeln!(s, "summary: {} checks, {} pass, {} fail, {} skip", m.total, m.pass, m.fail, m.skip);
            s
        }
    }
}

/// Write to `path`, or to stdout when no path is given.
pub fn write_report(report: &Report, format: Format, path: Option<&Path>) -> Result<(), CliError> {
    let text = emit_report(report, format);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = Report::new("none", 7, vec![]);
        assert_eq!(r.summary, Summary::default());
        assert!(r.success());
        assert!(emit_report(&r, Format::Text).ends_with("summary: 0 checks, 0 pass, 0 fail, 0 skip\n"));
        let v: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["summary"]["total"], 0);
        assert_eq!(v["schema"], SCHEMA_VERSION);
    }

    #[test]
    fn witness_forces_failure() {
        let c = Check::new("x", true, "d").with_witness(Some("w".into()));
        assert_eq!(c.status, Status::Fail);
        let r = Report::new("s", 0, vec![c, Check::skip("y", "n/a")]);
        assert!(!r.success());
        assert_eq!((r.summary.fail, r.summary.skip), (1, 1));
        let text = emit_report(&r, Format::Text);
        assert!(text.contains("FAIL x: d | witness: w"));
    }
}
