//! Run manifests: the machine-readable record of what a command did.
//!
//! Reports are byte-reproducible for a given command line and seed, so
//! wall time is kept out of the serialised form and printed to stderr.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The manifest describing a run: command, effective configuration,
/// seed, tolerance table, and every check outcome. Data files emitted by
/// the run are listed so each file points back at its manifest.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
    pub config: BTreeMap<String, String>,
    pub outputs: Vec<String>,
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    /// Wall time is measured but never serialised: reports must be
    /// byte-identical across runs.
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl RunManifest {
    pub fn new(command: &str, seed: u64) -> Self {
        RunManifest {
            command: command.to_string(),
            seed,
            tolerances: BTreeMap::new(),
            config: BTreeMap::new(),
            outputs: Vec::new(),
            checks: Vec::new(),
            passed: 0,
            failed: 0,
            wall_time_ms: 0,
        }
    }

    pub fn tolerance(&mut self, name: &str, value: f64) {
        self.tolerances.insert(name.to_string(), value);
    }

    pub fn config_entry(&mut self, key: &str, value: impl ToString) {
        self.config.insert(key.to_string(), value.to_string());
    }

    pub fn record(&mut self, check: CheckRecord) {
        if check.passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(check);
    }

    pub fn record_all(&mut self, checks: Vec<CheckRecord>) {
        for check in checks {
            self.record(check);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> anyhow::Result<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    /// One human line per check plus a summary, for stdout.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let flag = if check.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "[{flag}] {}/{} — {}\n",
                check.suite, check.name, check.detail
            ));
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            self.command, self.passed, self.failed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_time_never_reaches_the_report() {
        let mut m = RunManifest::new("verify", 42);
        m.wall_time_ms = 1234;
        m.tolerance("default", 1e-10);
        m.record(CheckRecord {
            suite: "algebra".into(),
            name: "assoc".into(),
            passed: true,
            detail: "max 1e-14".into(),
        });
        let text = m.to_json().unwrap();
        assert!(!text.contains("wall_time"));
        assert!(!text.contains("1234"));
        let back: RunManifest = serde_json::from_str(&text).unwrap();
        assert_eq!(back.wall_time_ms, 0);
        assert_eq!(back.passed, 1);
    }

    #[test]
    fn summary_counts_failures() {
        let mut m = RunManifest::new("verify", 1);
        m.record(CheckRecord {
            suite: "a".into(),
            name: "good".into(),
            passed: true,
            detail: String::new(),
        });
        m.record(CheckRecord {
            suite: "a".into(),
            name: "bad".into(),
            passed: false,
            detail: "residual 1e-3".into(),
        });
        assert!(!m.all_passed());
        let text = m.human_summary();
        assert!(text.contains("[FAIL] a/bad"));
        assert!(text.contains("1 passed, 1 failed"));
    }
}
