//! Check results and reports.

use serde::Serialize;
use serde_json::Value;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The computation is consistent but disagrees with a printed claim.
    Finding,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
            Status::Skipped => "skipped",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub citation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall-clock time; kept out of JSON so reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn new(id: impl Into<String>, citation: impl Into<String>, status: Status, expected: Value, computed: Value) -> Self {
        CheckResult {
            id: id.into(),
            status,
            expected,
            computed,
            citation: citation.into(),
            note: None,
            elapsed: Duration::ZERO,
        }
    }

    /// Pass iff the two payloads are equal.
    pub fn compare(id: impl Into<String>, citation: impl Into<String>, expected: Value, computed: Value) -> Self {
        let ok = expected == computed;
        Self::new(id, citation, Status::from_bool(ok), expected, computed)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A group of results from one verification routine.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// No check failed (findings and skips allowed).
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn all_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }
}

impl FromIterator<CheckResult> for CheckReport {
    fn from_iter<T: IntoIterator<Item = CheckResult>>(iter: T) -> Self {
        CheckReport { checks: iter.into_iter().collect() }
    }
}
