//! Uniform records for every verification check.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub claim: String,
    pub mode: Mode,
    pub verdict: Verdict,
    pub measured: String,
    pub expected: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>, claim: impl Into<String>, mode: Mode) -> Self {
        CheckReport {
            check_name: check_name.into(),
            claim: claim.into(),
            mode,
            verdict: Verdict::Inconclusive,
            measured: String::new(),
            expected: String::new(),
            witness: None,
            runtime_ms: 0,
        }
    }

    pub fn values(mut self, measured: impl fmt::Display, expected: impl fmt::Display) -> Self {
        self.measured = measured.to_string();
        self.expected = expected.to_string();
        self
    }

    pub fn verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }

    pub fn pass_if(self, ok: bool) -> Self {
        self.verdict(if ok { Verdict::Pass } else { Verdict::Fail })
    }

    pub fn witness(mut self, witness: Option<String>) -> Self {
        self.witness = witness;
        self
    }

    pub fn runtime(mut self, since: Instant) -> Self {
        self.runtime_ms = since.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<12} {} [{}]: {} (measured {}, expected {}, {} ms)",
            self.verdict.to_string(),
            self.check_name,
            match self.mode {
                Mode::Exact => "exact",
                Mode::Sampled => "sampled",
            },
            self.claim,
            self.measured,
            self.expected,
            self.runtime_ms
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}
