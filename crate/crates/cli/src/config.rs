//! Run configuration for the verification suites.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Diffsets,
    Profiles,
    Equivalence,
    Curves,
    Identities,
    Codes,
    Observations,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Diffsets,
        Suite::Profiles,
        Suite::Equivalence,
        Suite::Curves,
        Suite::Identities,
        Suite::Codes,
        Suite::Observations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Diffsets => "diffsets",
            Suite::Profiles => "profiles",
            Suite::Equivalence => "equivalence",
            Suite::Curves => "curves",
            Suite::Identities => "identities",
            Suite::Codes => "codes",
            Suite::Observations => "observations",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(ConfigError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("m must be odd (got {0})")]
    EvenDegree(u32),
    #[error("m = {0} is outside the supported table")]
    UnsupportedDegree(u32),
    #[error("unknown suite `{0}` (expected one of diffsets, profiles, equivalence, curves, identities, codes, observations)")]
    UnknownSuite(String),
    #[error("unknown format `{0}` (expected json, csv or text)")]
    UnknownFormat(String),
    #[error("no degrees requested")]
    NoDegrees,
}

/// A validated run request.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub m_values: Vec<u32>,
    pub suites: Vec<Suite>,
    pub threads: usize,
    /// Treat conjecture-status failures as run failures.
    pub strict: bool,
    /// Run the exhaustive curve scans at every requested degree.
    pub deep: bool,
    /// Report measured per-check times instead of zeros (zeros keep reports
    /// byte-identical across runs).
    pub timing: bool,
}

impl RunConfig {
    pub fn new(m_values: Vec<u32>, suites: Vec<Suite>) -> Result<RunConfig, ConfigError> {
        if m_values.is_empty() {
            return Err(ConfigError::NoDegrees);
        }
        let mut m_values = m_values;
        let mut seen = std::collections::BTreeSet::new();
        m_values.retain(|&m| seen.insert(m));
        for &m in &m_values {
            if m % 2 == 0 {
                return Err(ConfigError::EvenDegree(m));
            }
            if trinodiff_core::FieldCtx::new(m).is_err() {
                return Err(ConfigError::UnsupportedDegree(m));
            }
        }
        let mut suites = if suites.is_empty() {
            Suite::ALL.to_vec()
        } else {
            suites
        };
        suites.sort();
        suites.dedup();
        Ok(RunConfig {
            m_values,
            suites,
            threads: 1,
            strict: false,
            deep: false,
            timing: false,
        })
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }

    pub fn with_deep(mut self, deep: bool) -> Self {
        self.deep = deep;
        self
    }

    pub fn with_timing(mut self, timing: bool) -> Self {
        self.timing = timing;
        self
    }
}
