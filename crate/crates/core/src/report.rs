use serde::Serialize;

use crate::linalg::Vector;

/// First counterexample found by a checker: which condition broke, at which
/// basis indices (and t-order, for deformation checks), and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub condition: String,
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Outcome of a verification. Checks run over basis tuples only; every
/// identity involved is multilinear, so that is sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct CheckReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport { holds: true, failure: None, notes: Vec::new() }
    }

    pub fn fail(failure: Failure) -> Self {
        CheckReport { holds: false, failure: Some(failure), notes: Vec::new() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Name of the failed condition, if any.
    pub fn condition(&self) -> Option<&str> {
        self.failure.as_ref().map(|f| f.condition.as_str())
    }

    /// `self` if it failed, otherwise `next()`. Chains checks so the first
    /// failing condition is the one reported.
    pub fn and_then(self, next: impl FnOnce() -> CheckReport) -> CheckReport {
        if self.holds {
            let mut r = next();
            let mut notes = self.notes;
            notes.append(&mut r.notes);
            r.notes = notes;
            r
        } else {
            self
        }
    }
}

/// Collects the first mismatch while a checker walks its basis tuples.
pub(crate) struct Witness {
    condition: String,
    order: Option<usize>,
}

impl Witness {
    pub(crate) fn new(condition: impl Into<String>) -> Self {
        Witness { condition: condition.into(), order: None }
    }

    pub(crate) fn at_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    /// `Some(failure)` when `lhs != rhs`.
    pub(crate) fn compare(&self, indices: &[usize], lhs: Vector, rhs: Vector) -> Option<Failure> {
        (lhs != rhs).then(|| Failure {
            condition: self.condition.clone(),
            indices: indices.to_vec(),
            order: self.order,
            lhs,
            rhs,
        })
    }
}

/// Runs `probe` over every index tuple in `[0, dims[0]) × … × [0, dims[k])`
/// in lexicographic order, stopping at the first failure.
pub(crate) fn first_failure(dims: &[usize], mut probe: impl FnMut(&[usize]) -> Option<Failure>) -> CheckReport {
    for tuple in crate::index_product(dims) {
        if let Some(f) = probe(&tuple) {
            return CheckReport::fail(f);
        }
    }
    CheckReport::pass()
}
