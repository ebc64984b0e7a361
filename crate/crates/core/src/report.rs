//! Outcome records shared by every verification routine.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    /// Exact data that decided the outcome, in the polynomial grammar where possible.
    pub witness: String,
    /// What the check asserts.
    pub claim: String,
    /// Discrepancy flags and skip reasons.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn new(id: impl Into<String>, claim: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        let mut witness = witness.into();
        if !ok && witness.is_empty() {
            witness = "(no witness recorded)".into();
        }
        CheckResult { id: id.into(), status: if ok { Status::Pass } else { Status::Fail }, witness, claim: claim.into(), note: None }
    }

    pub fn skipped(id: impl Into<String>, claim: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckResult { id: id.into(), status: Status::Skipped, witness: String::new(), claim: claim.into(), note: Some(reason.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
