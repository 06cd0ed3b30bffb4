//! Pass/fail records produced by the verification routines.
//!
//! Every identity check yields a [`Check`]: a stable identifier, the claim
//! it verifies written out as a formula, the graph order it ran at (absent
//! for order-independent checks) and the outcome. Failures always carry a
//! [`Witness`] pointing at a concrete counterexample entry; passes never do.

use alloc::string::{String, ToString};
use core::fmt;

use crate::matrix::{RatMatrix, RatVec, Rational};

/// Location and exact values of the first disagreeing entry of a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(Witness),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// Stable machine-readable identifier, e.g. `helm_det`.
    pub identity: &'static str,
    /// The verified identity spelled out, e.g. `det(D) = 3(n-1)*2^(n-1)`.
    pub claim: &'static str,
    /// Graph order the check ran at; `None` for order-independent checks.
    pub n: Option<u32>,
    pub status: CheckStatus,
}

impl Check {
    pub fn pass(identity: &'static str, claim: &'static str, n: Option<u32>) -> Self {
        Check {
            identity,
            claim,
            n,
            status: CheckStatus::Pass,
        }
    }

    pub fn fail(identity: &'static str, claim: &'static str, n: Option<u32>, witness: Witness) -> Self {
        Check {
            identity,
            claim,
            n,
            status: CheckStatus::Fail(witness),
        }
    }

    pub fn skipped(
        identity: &'static str,
        claim: &'static str,
        n: Option<u32>,
        reason: impl Into<String>,
    ) -> Self {
        Check {
            identity,
            claim,
            n,
            status: CheckStatus::Skipped(reason.into()),
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, CheckStatus::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, CheckStatus::Fail(_))
    }

    /// Pass/fail from an exact matrix comparison; the witness is the first
    /// differing entry.
    pub fn matrix_eq(
        identity: &'static str,
        claim: &'static str,
        n: Option<u32>,
        actual: &RatMatrix,
        expected: &RatMatrix,
    ) -> Self {
        match actual.first_difference(expected) {
            None => Check::pass(identity, claim, n),
            Some((r, c)) => {
                let shape_mismatch =
                    actual.rows() != expected.rows() || actual.cols() != expected.cols();
                let witness = if shape_mismatch {
                    Witness {
                        row: r,
                        col: c,
                        expected: alloc::format!("{}x{}", expected.rows(), expected.cols()),
                        actual: alloc::format!("{}x{}", actual.rows(), actual.cols()),
                    }
                } else {
                    Witness {
                        row: r,
                        col: c,
                        expected: expected.at(r, c).to_string(),
                        actual: actual.at(r, c).to_string(),
                    }
                };
                Check::fail(identity, claim, n, witness)
            }
        }
    }

    pub fn vec_eq(
        identity: &'static str,
        claim: &'static str,
        n: Option<u32>,
        actual: &RatVec,
        expected: &RatVec,
    ) -> Self {
        Check::matrix_eq(identity, claim, n, &actual.as_column(), &expected.as_column())
    }

    pub fn scalar_eq(
        identity: &'static str,
        claim: &'static str,
        n: Option<u32>,
        actual: &Rational,
        expected: &Rational,
    ) -> Self {
        if actual == expected {
            Check::pass(identity, claim, n)
        } else {
            Check::fail(
                identity,
                claim,
                n,
                Witness {
                    row: 0,
                    col: 0,
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                },
            )
        }
    }

    /// Pass/fail from a boolean condition with preformatted witness strings.
    pub fn condition(
        identity: &'static str,
        claim: &'static str,
        n: Option<u32>,
        ok: bool,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        if ok {
            Check::pass(identity, claim, n)
        } else {
            Check::fail(
                identity,
                claim,
                n,
                Witness {
                    row: 0,
                    col: 0,
                    expected: expected.into(),
                    actual: actual.into(),
                },
            )
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.n {
            Some(n) => write!(f, "{} (n={}): ", self.identity, n)?,
            None => write!(f, "{}: ", self.identity)?,
        }
        match &self.status {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail(w) => write!(
                f,
                "FAIL at ({}, {}): expected {}, got {}",
                w.row, w.col, w.expected, w.actual
            ),
            CheckStatus::Skipped(reason) => write!(f, "skipped ({})", reason),
        }
    }
}
