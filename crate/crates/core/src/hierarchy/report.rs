use std::collections::BTreeMap;

use serde::Serialize;

use super::diagram::{violations_in, Violation};
use super::invariant::{verdicts, InvariantId, Verdict};
use crate::graph::{are_isomorphic, Graph};

/// Verdicts on one pair, with the diagram check and the isomorphism witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationCertificate {
    pub pair: String,
    pub verdicts: BTreeMap<InvariantId, Verdict>,
    /// `None` only when the pair is too large for the isomorphism oracle
    /// and no computed invariant separates it.
    pub isomorphic: Option<bool>,
    pub diagram_ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    /// Verdicts the pair is expected to produce; empty for plain comparisons.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<InvariantId, Verdict>,
    /// Expected verdicts that were not met.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub deltas: Vec<String>,
}

impl SeparationCertificate {
    /// Expectations met, diagram intact, and the pair is not isomorphic.
    pub fn passed(&self) -> bool {
        self.deltas.is_empty() && self.diagram_ok && self.isomorphic == Some(false)
    }

    /// Records `expected` and the mismatches against the computed verdicts.
    pub fn expect(&mut self, expected: &[(InvariantId, Verdict)]) {
        for &(id, want) in expected {
            self.expected.insert(id, want);
            match self.verdicts.get(&id) {
                Some(&got) if got == want => {}
                Some(&got) => self.deltas.push(format!("{id}: expected {want}, got {got}")),
                None => self.deltas.push(format!("{id}: expected {want}, not computed")),
            }
        }
    }

    pub fn note(&mut self, delta: impl Into<String>) {
        self.deltas.push(delta.into());
    }
}

/// Verdict table, diagram check and isomorphism witness for `(g, h)`.
pub fn compare_pair(pair: &str, g: &Graph, h: &Graph, invariants: &[InvariantId]) -> SeparationCertificate {
    let verdicts = verdicts(g, h, invariants);
    let violations = violations_in(pair, &verdicts);
    let separated = verdicts.iter().any(|(&id, &v)| id != InvariantId::Iso && v == Verdict::Unequal);
    let isomorphic = match verdicts.get(&InvariantId::Iso) {
        Some(Verdict::Equal) => Some(true),
        Some(Verdict::Unequal) => Some(false),
        _ if separated => Some(false),
        _ => are_isomorphic(g, h).ok(),
    };
    SeparationCertificate {
        pair: pair.to_string(),
        diagram_ok: violations.is_empty(),
        violations,
        verdicts,
        isomorphic,
        expected: BTreeMap::new(),
        deltas: Vec::new(),
    }
}
