use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of a structural validation or predicate, carrying the first
/// violated law and its witness on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail { law: String, witness: String },
}

impl Verdict {
    pub fn fail(law: impl Into<String>, witness: impl Into<String>) -> Self {
        Verdict::Fail {
            law: law.into(),
            witness: witness.into(),
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    /// Short-circuits on the first failure.
    pub fn and(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { witness, .. } => Some(witness),
        }
    }

    pub fn law(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { law, .. } => Some(law),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail { law, witness } => write!(f, "fail: {law} at {witness}"),
        }
    }
}
