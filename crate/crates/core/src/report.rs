//! Verification reports: one record per check, with both exact sides kept on failure.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    /// Cell coordinates or indices the check was run at.
    pub indices: Vec<i64>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(check: impl Into<String>, indices: &[i64], status: Status) -> Self {
        Self {
            check: check.into(),
            indices: indices.to_vec(),
            status,
            lhs: None,
            rhs: None,
            note: None,
        }
    }

    /// A pass/fail comparison of two exact values.
    pub fn compare<T: Serialize + PartialEq>(
        check: impl Into<String>,
        indices: &[i64],
        lhs: &T,
        rhs: &T,
    ) -> Self {
        let mut rec = Self::new(check, indices, Status::from_bool(lhs == rhs));
        rec.lhs = serde_json::to_value(lhs).ok();
        rec.rhs = serde_json::to_value(rhs).ok();
        rec
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub engine_version: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Default for Report {
    fn default() -> Self {
        Self::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Self {
            engine_version: crate::ENGINE_VERSION.to_string(),
            records: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, rec: CheckRecord) {
        self.summary.total += 1;
        match rec.status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.records.push(rec);
    }

    pub fn extend(&mut self, other: Report) {
        for rec in other.records {
            self.push(rec);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn records_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a CheckRecord> + 'a {
        self.records.iter().filter(move |r| r.check == check)
    }

    /// Recomputes the tallies from the records.
    pub fn tally(&self) -> Summary {
        let mut s = Summary::default();
        for rec in &self.records {
            s.total += 1;
            match rec.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}
