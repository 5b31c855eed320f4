//! Verification campaigns over graph corpora and the report formats they emit.

mod campaign;
mod report;

pub use campaign::{evaluate_graph, run_campaign, run_campaign_with, GraphOutcome};
pub use report::{write_csv, CsvWriter, GraphRecord, CSV_COLUMNS};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, MAX_ENUMERATION_ORDER, MAX_ENUMERATION_ORDER_OVERRIDE};

pub const DEFAULT_SOUNDNESS_TOL: f64 = 1e-9;
pub const DEFAULT_EQUALITY_TOL: f64 = crate::equality::DEFAULT_EQUALITY_TOL;
/// Allowed excess of `φ_ℓ` over the Shu–Wu value at the same level.
pub const DOMINANCE_TOL: f64 = 1e-12;
/// Window inside which two `φ` values count as equal in float comparisons.
pub const STEP_TOL: f64 = 1e-9;
pub const JOBS_ENV: &str = "RHO_BOUNDS_JOBS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Enumerate { n: usize, allow_large: bool },
    Graph6File(PathBuf),
    EdgeListFile(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Soundness,
    Dominance,
    Equality,
    Unimodality,
    Replay,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Soundness, Check::Dominance, Check::Equality, Check::Unimodality, Check::Replay];

    pub fn name(self) -> &'static str {
        match self {
            Check::Soundness => "soundness",
            Check::Dominance => "dominance",
            Check::Equality => "equality",
            Check::Unimodality => "unimodality",
            Check::Replay => "replay",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(text: &str) -> Result<BTreeSet<Check>, String> {
        let mut out = BTreeSet::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                out.extend(Check::ALL);
            } else {
                out.insert(item.parse()?);
            }
        }
        if out.is_empty() {
            return Err("no checks selected".into());
        }
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?} (expected one of soundness, dominance, equality, unimodality, replay, all)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Csv,
    #[default]
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown output format {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub source: Source,
    /// Slack allowed in `ρ <= bound` style checks.
    pub tol: f64,
    /// Window for deciding that `φ_ℓ = ρ` numerically.
    pub equality_tol: f64,
    pub checks: BTreeSet<Check>,
    pub output_format: OutputFormat,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

impl CampaignConfig {
    pub fn new(source: Source) -> Self {
        Self {
            source,
            tol: DEFAULT_SOUNDNESS_TOL,
            equality_tol: DEFAULT_EQUALITY_TOL,
            checks: Check::ALL.into_iter().collect(),
            output_format: OutputFormat::default(),
            jobs: 0,
        }
    }

    pub fn validate(&self) -> Result<(), CampaignError> {
        if self.tol.is_nan() || self.tol <= 0.0 || self.equality_tol.is_nan() || self.equality_tol <= 0.0 {
            return Err(CampaignError::Config("tolerances must be positive".into()));
        }
        if let Source::Enumerate { n, allow_large } = self.source {
            let max = if allow_large { MAX_ENUMERATION_ORDER_OVERRIDE } else { MAX_ENUMERATION_ORDER };
            if n == 0 || n > max {
                return Err(CampaignError::Config(format!(
                    "enumeration supports 1 <= n <= {max}{}",
                    if allow_large { "" } else { " (use --allow-large for n = 8)" }
                )));
            }
        }
        if self.checks.is_empty() {
            return Err(CampaignError::Config("no checks selected".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position of the graph in the source stream, counting skipped graphs.
    pub index: usize,
    /// graph6 encoding of the graph as read.
    pub id: String,
    pub check: Check,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignResult {
    pub graphs_checked: usize,
    pub skipped_disconnected: usize,
    pub checks: Vec<Check>,
    pub violations: Vec<Violation>,
    pub tight_instances: BTreeMap<Check, usize>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("campaign result serializes")
    }

    /// `0` when every check passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }
}

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("record {record}: {source}")]
    Parse { record: usize, source: GraphError },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot write report: {0}")]
    Output(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_lists() {
        assert_eq!(Check::parse_list("all").unwrap().len(), 5);
        let some = Check::parse_list("soundness, replay").unwrap();
        assert_eq!(some.into_iter().collect::<Vec<_>>(), vec![Check::Soundness, Check::Replay]);
        assert!(Check::parse_list("soundness,bogus").is_err());
        assert!(Check::parse_list("").is_err());
    }

    #[test]
    fn config_validation() {
        let mut cfg = CampaignConfig::new(Source::Enumerate { n: 8, allow_large: false });
        assert!(matches!(cfg.validate(), Err(CampaignError::Config(_))));
        cfg.source = Source::Enumerate { n: 8, allow_large: true };
        assert!(cfg.validate().is_ok());
        cfg.tol = 0.0;
        assert!(cfg.validate().is_err());
    }
}
