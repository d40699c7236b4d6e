//! Command-line front end: named suites over the library and their reports.

mod report;
mod suites;

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::Parser;
use thiserror::Error;

use crate::rootsys::RootKind;

pub use report::{emit_report, write_report, Check, Classifier, Format, Report, Status, Summary, SCHEMA_VERSION};
pub use suites::{run_suite, CURVE_INPUTS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{0}")]
    Library(String),
}

impl CliError {
    pub(crate) fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), msg: e.to_string() }
    }

    pub(crate) fn lib(e: impl fmt::Display) -> Self {
        CliError::Library(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Relations,
    Symbols,
    Units,
    Filtration,
    Extensions,
    Derivations,
    All,
}

impl Suite {
    /// The suites that `all` runs, in order.
    pub const COMPONENTS: [Suite; 6] =
        [Suite::Relations, Suite::Symbols, Suite::Units, Suite::Filtration, Suite::Extensions, Suite::Derivations];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Symbols => "symbols",
            Suite::Units => "units",
            Suite::Filtration => "filtration",
            Suite::Extensions => "extensions",
            Suite::Derivations => "derivations",
            Suite::All => "all",
        }
    }

    fn accepts_input(self) -> bool {
        matches!(self, Suite::Relations | Suite::Extensions | Suite::Derivations)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters left as `None` fall back to each suite's own sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub system: Option<RootKind>,
    pub trunc: Option<usize>,
    pub prime: Option<u64>,
    pub samples: Option<usize>,
    pub seed: u64,
    /// Structure constants for `relations`, an algebra table for
    /// `extensions`, a curve file for `derivations`.
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Format,
}

pub const DEFAULT_SEED: u64 = 42;

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            system: None,
            trunc: None,
            prime: None,
            samples: None,
            seed: DEFAULT_SEED,
            input: None,
            output: None,
            format: Format::Text,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.trunc == Some(0) {
            return Err(CliError::Usage("--trunc must be at least 1".into()));
        }
        if self.input.is_some() && !self.suite.accepts_input() {
            return Err(CliError::Usage(format!("suite {} takes no --input", self.suite)));
        }
        Ok(())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "chevkern",
    version,
    about = "Exact verification suites for Chevalley groups, symbols, truncated algebras and derivations"
)]
pub struct Args {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Root system: A2, A3 or C2.
    #[arg(long)]
    pub system: Option<RootKind>,
    /// Truncation order d of Q[e]/(e^d).
    #[arg(long)]
    pub trunc: Option<usize>,
    /// Prime for the tame symbol.
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl Args {
    pub fn into_config(self) -> SuiteConfig {
        SuiteConfig {
            suite: self.suite,
            system: self.system,
            trunc: self.trunc,
            prime: self.prime,
            samples: self.samples,
            seed: self.seed,
            input: self.input,
            output: self.output,
            format: self.format,
        }
    }
}

/// Exit codes: 0 all checks pass, 1 some check failed, 2 usage, I/O or library error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let config = args.into_config();
    let result = run_suite(&config)
        .and_then(|report| write_report(&report, config.format, config.output.as_deref()).map(|_| report));
    match result {
        Ok(report) if report.success() => 0,
        Ok(_) => 1,
        Err(e) => {
            eprintln!("chevkern: {e}");
            2
        }
    }
}
