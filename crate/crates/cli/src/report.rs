//! JSON-lines report records. One line per identity check; failures carry
//! the exact witness entry, passes never do, and order-independent checks
//! serialize with `"n": null`.

use helmdist_core::check::{Check, CheckStatus};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub identity: String,
    pub claim: String,
    pub n: Option<u32>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    /// Wall time of the operation that produced this record.
    pub elapsed_ms: u64,
}

impl Record {
    pub fn from_check(check: Check, elapsed_ms: u64) -> Self {
        let (status, reason, witness) = match check.status {
            CheckStatus::Pass => ("pass", None, None),
            CheckStatus::Fail(w) => (
                "fail",
                None,
                Some(WitnessRecord {
                    row: w.row,
                    col: w.col,
                    expected: w.expected,
                    actual: w.actual,
                }),
            ),
            CheckStatus::Skipped(reason) => ("skipped", Some(reason), None),
        };
        Record {
            identity: check.identity.to_string(),
            claim: check.claim.to_string(),
            n: check.n,
            status,
            reason,
            witness,
            elapsed_ms,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn add(&mut self, record: &Record) {
        match record.status {
            "pass" => self.pass += 1,
            "fail" => self.fail += 1,
            _ => self.skipped += 1,
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.skipped += other.skipped;
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }
}
