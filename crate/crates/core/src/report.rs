use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Structured witness data attached to a check verdict: the failing cell,
/// the ambiguous pair, the synthesized inverse, and so on. Failing verdicts
/// always carry one; passing verdicts may carry synthesized data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Canonical one-line summary, smallest witness first in enumeration
    /// order.
    pub label: String,
    /// Named cell data, keyed by role.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(label: impl Into<String>) -> Self {
        Witness {
            label: label.into(),
            data: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.data.insert(key.into(), value.into());
        self
    }
}

/// Result of one registered check: a verdict, optional witness, the probe
/// battery exercised, and free-form notes (semi-decision caveats,
/// internal-consistency flags).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub probes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn pass(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            verdict: true,
            witness: None,
            probes: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(check: impl Into<String>, witness: Witness) -> Self {
        CheckReport {
            check: check.into(),
            verdict: false,
            witness: Some(witness),
            probes: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_probes(mut self, probes: Vec<String>) -> Self {
        self.probes = probes;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Witness label, for tests that pin exact counterexample cells.
    pub fn witness_label(&self) -> Option<&str> {
        self.witness.as_ref().map(|w| w.label.as_str())
    }

    pub fn witness_data(&self, key: &str) -> Option<&str> {
        self.witness
            .as_ref()
            .and_then(|w| w.data.get(key))
            .map(|s| s.as_str())
    }
}
