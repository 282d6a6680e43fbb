use serde::Serialize;
use serde_json::Value;

use lra_core::CheckReport;

/// Common envelope for every command that reports rather than constructs.
/// Keys serialize in sorted order; `elapsed_ms` appears only with `--timing`.
#[derive(Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, holds: Option<bool>, details: Value) -> Self {
        Report { command: command.to_string(), holds, details, elapsed_ms: None }
    }

    /// Wraps a check: `details` gains `first_failure` and `notes` when present.
    pub fn check(command: &str, r: &CheckReport, details: Value) -> Output {
        Output::Report(Report::from_check(command, r, details))
    }

    pub fn from_check(command: &str, r: &CheckReport, mut details: Value) -> Report {
        if let Some(f) = &r.failure {
            details["first_failure"] = serde_json::to_value(f).expect("failures serialize");
        }
        if !r.notes.is_empty() {
            details["notes"] = serde_json::to_value(&r.notes).expect("notes serialize");
        }
        Report::new(command, Some(r.holds), details)
    }
}

pub enum Output {
    Report(Report),
    /// A constructed object, printed in its file format.
    Object(Value),
    /// A construction whose input did not meet its hypotheses.
    Refused(Report),
}
