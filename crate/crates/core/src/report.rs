//! The JSON envelope shared by every verification suite.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::towers::LevelSummary;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub parameters: Value,
    pub per_level: Vec<LevelSummary>,
    pub height_or_tau: Option<u64>,
    pub expected: Option<u64>,
    pub passed: bool,
    pub wall_time_ms: u64,
    /// Named timings in milliseconds; excluded from the digest like `wall_time_ms`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub timings: BTreeMap<String, u64>,
    /// Suite-specific results.
    pub results: Value,
    /// Named checks in evaluation order.
    pub checks: Vec<Check>,
    /// Set when a cap stopped the computation before a verdict.
    pub resource_cap: Option<String>,
    /// SHA-256 of the report with `wall_time_ms` zeroed and this field empty.
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Accumulates checks while a suite runs.
pub struct ReportBuilder {
    suite: String,
    parameters: Value,
    started: Instant,
    per_level: Vec<LevelSummary>,
    height_or_tau: Option<u64>,
    expected: Option<u64>,
    results: serde_json::Map<String, Value>,
    checks: Vec<Check>,
    resource_cap: Option<String>,
    timings: BTreeMap<String, u64>,
}

impl ReportBuilder {
    pub fn new(suite: &str, parameters: Value) -> Self {
        ReportBuilder {
            suite: suite.to_string(),
            parameters,
            started: Instant::now(),
            per_level: Vec::new(),
            height_or_tau: None,
            expected: None,
            results: serde_json::Map::new(),
            checks: Vec::new(),
            resource_cap: None,
            timings: BTreeMap::new(),
        }
    }

    pub fn timing(&mut self, name: &str, ms: u64) {
        self.timings.insert(name.to_string(), ms);
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("results serialize");
        self.results.insert(key.to_string(), value);
    }

    pub fn levels(&mut self, levels: Vec<LevelSummary>) {
        self.per_level = levels;
    }

    pub fn height(&mut self, measured: u64, expected: Option<u64>) {
        self.height_or_tau = Some(measured);
        self.expected = expected;
    }

    /// Records an error; cap errors mark the report as stopped by a cap.
    pub fn error(&mut self, context: &str, e: &crate::Error) {
        if e.is_resource_cap() {
            self.resource_cap = Some(format!("{}: {}", context, e));
        }
        self.check(context, false, e.to_string());
    }

    /// Marks the report as stopped by a cap without a verdict.
    pub fn stopped_by_cap(&mut self, reason: impl Into<String>) {
        self.resource_cap = Some(reason.into());
    }

    pub fn finish(self) -> Report {
        let passed = !self.checks.is_empty() && self.checks.iter().all(|c| c.passed);
        let mut report = Report {
            suite: self.suite,
            parameters: self.parameters,
            per_level: self.per_level,
            height_or_tau: self.height_or_tau,
            expected: self.expected,
            passed,
            wall_time_ms: 0,
            timings: self.timings,
            results: Value::Object(self.results),
            checks: self.checks,
            resource_cap: self.resource_cap,
            digest: String::new(),
        };
        report.digest = report.compute_digest();
        report.wall_time_ms = self.started.elapsed().as_millis() as u64;
        report
    }
}

impl Report {
    /// Digest of everything except timing.
    pub fn compute_digest(&self) -> String {
        let mut stripped = self.clone();
        stripped.wall_time_ms = 0;
        stripped.timings.clear();
        stripped.digest = String::new();
        let bytes = serde_json::to_vec(&stripped).expect("reports serialize");
        hex::encode(Sha256::digest(&bytes))
    }

    /// Appends a check after the fact, updating the verdict and digest.
    pub fn add_check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        self.passed = self.passed && passed;
        self.digest = self.compute_digest();
    }

    /// 0 on pass, 3 when a cap stopped the run, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match (self.passed, &self.resource_cap) {
            (true, _) => 0,
            (false, Some(_)) => 3,
            (false, None) => 1,
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Human-readable rendering of the same payload.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} {}: {}\n",
            self.suite,
            self.parameters,
            if self.passed { "PASS" } else { "FAIL" }
        );
        if let Some(h) = self.height_or_tau {
            out.push_str(&format!("  height/tau: {}", h));
            if let Some(e) = self.expected {
                out.push_str(&format!(" (expected {})", e));
            }
            out.push('\n');
        }
        for (i, l) in self.per_level.iter().enumerate() {
            out.push_str(&format!("  level {}: order {}, degree {}", i, l.order, l.degree));
            if let Some(c) = l.centreless {
                out.push_str(&format!(", centreless {}", c));
            }
            if let Some(c) = l.complete {
                out.push_str(&format!(", complete {}", c));
            }
            out.push('\n');
        }
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}: {}\n",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        if let Some(cap) = &self.resource_cap {
            out.push_str(&format!("  stopped by cap: {}\n", cap));
        }
        for (name, ms) in &self.timings {
            out.push_str(&format!("  {}: {} ms\n", name, ms));
        }
        out.push_str(&format!("  {} ms, digest {}\n", self.wall_time_ms, &self.digest[..16]));
        out
    }
}
