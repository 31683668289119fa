use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::invariant::{verdicts, InvariantId, Path, Verdict};
use crate::graph::Graph;
use crate::refinement::RefinementLevel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// `stronger` equal implies `weaker` equal.
    Implies,
    /// The two invariants coincide.
    Equivalent,
    /// `ω^(•) → … → ω^(2) → ω^(1)`: every higher level implies every lower one.
    Chain,
}

/// An arrow of the diagram: `weaker ⪯ stronger`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramEdge {
    pub stronger: InvariantId,
    pub weaker: InvariantId,
    pub kind: EdgeKind,
}

impl fmt::Display for DiagramEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EdgeKind::Implies => write!(f, "{} -> {}", self.stronger, self.weaker),
            EdgeKind::Equivalent => write!(f, "{} <-> {}", self.stronger, self.weaker),
            EdgeKind::Chain => write!(f, "{} -> omega(r) chain", self.stronger),
        }
    }
}

const fn edge(stronger: InvariantId, weaker: InvariantId, kind: EdgeKind) -> DiagramEdge {
    DiagramEdge { stronger, weaker, kind }
}

const fn omega(r: RefinementLevel) -> InvariantId {
    InvariantId::Omega(r)
}

const HALF: RefinementLevel = RefinementLevel::Half;
const STABLE: RefinementLevel = RefinementLevel::Stable;

/// The 18 arrows relating the invariants.
pub const DIAGRAM: [DiagramEdge; 18] = {
    use EdgeKind::*;
    use InvariantId::*;
    [
        edge(Wl2, omega(STABLE), Implies),
        edge(Wl2, Wl32, Implies),
        edge(omega(STABLE), omega(RefinementLevel::ONE), Chain),
        edge(omega(STABLE), Wl1, Implies),
        edge(Wl32, Wl1, Implies),
        edge(Wl32, omega(HALF), Implies),
        edge(Wl1, Wm, Implies),
        edge(omega(RefinementLevel::ONE), omega(HALF), Implies),
        edge(omega(RefinementLevel::ONE), Strong(Path::Exact), Equivalent),
        edge(omega(HALF), Wm, Implies),
        edge(omega(HALF), Genspec, Implies),
        edge(omega(HALF), omega(RefinementLevel::ZERO), Implies),
        edge(omega(HALF), Weak(Path::Exact), Equivalent),
        edge(omega(RefinementLevel::ZERO), Spec, Implies),
        edge(omega(RefinementLevel::ZERO), Ea(Path::Exact), Equivalent),
        edge(Genspec, Mea, Implies),
        edge(Genspec, Spec, Implies),
        edge(Wm, Mea, Implies),
    ]
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub pair: String,
    pub edge: String,
    /// The offending verdicts, `stronger = equal` then `weaker = unequal`.
    pub detail: String,
}

/// Both paths of a spectral invariant, or the invariant itself.
fn variants(id: InvariantId) -> Vec<InvariantId> {
    match id {
        InvariantId::Ea(_) => vec![InvariantId::Ea(Path::Exact), InvariantId::Ea(Path::Float)],
        InvariantId::Weak(_) => vec![InvariantId::Weak(Path::Exact), InvariantId::Weak(Path::Float)],
        InvariantId::Strong(_) => vec![InvariantId::Strong(Path::Exact), InvariantId::Strong(Path::Float)],
        other => vec![other],
    }
}

/// Edges broken by a verdict table. Skipped verdicts never break an edge.
pub fn violations_in(pair: &str, v: &BTreeMap<InvariantId, Verdict>) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut check = |e: &DiagramEdge, a: InvariantId, b: InvariantId| {
        if v.get(&a) == Some(&Verdict::Equal) && v.get(&b) == Some(&Verdict::Unequal) {
            out.push(Violation { pair: pair.to_string(), edge: e.to_string(), detail: format!("{a} = equal, {b} = unequal") });
        }
    };
    for e in &DIAGRAM {
        match e.kind {
            EdgeKind::Chain => {
                let levels: Vec<InvariantId> = v
                    .keys()
                    .copied()
                    .filter(|id| matches!(id, InvariantId::Omega(r) if *r >= RefinementLevel::ONE))
                    .collect();
                for (i, &lo) in levels.iter().enumerate() {
                    for &hi in &levels[i + 1..] {
                        check(e, hi, lo);
                    }
                }
            }
            kind => {
                for a in variants(e.stronger) {
                    for b in variants(e.weaker) {
                        check(e, a, b);
                        if kind == EdgeKind::Equivalent {
                            check(e, b, a);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Computes the full diagram verdict set on every pair and reports broken
/// edges, ordered by pair id.
pub fn check_diagram<I>(pairs: I, r_max: u32) -> Vec<Violation>
where
    I: IntoIterator<Item = (String, Graph, Graph)>,
{
    let pairs: Vec<(String, Graph, Graph)> = pairs.into_iter().collect();
    let ids = InvariantId::diagram_set(r_max);
    let mut out: Vec<Violation> =
        pairs.par_iter().flat_map_iter(|(id, g, h)| violations_in(id, &verdicts(g, h, &ids))).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn eighteen_distinct_edges() {
        let names: std::collections::BTreeSet<String> = DIAGRAM.iter().map(|e| e.to_string()).collect();
        assert_eq!(names.len(), 18);
    }

    #[test]
    fn a_graph_against_itself() {
        let g = generate(Family::Cycle(7)).unwrap();
        let v = verdicts(&g, &g, &InvariantId::diagram_set(3));
        assert!(v.values().all(|&x| x == Verdict::Equal));
        assert!(violations_in("self", &v).is_empty());
    }

    #[test]
    fn detects_a_planted_violation() {
        let mut v = BTreeMap::new();
        v.insert(InvariantId::Wl1, Verdict::Equal);
        v.insert(InvariantId::Wm, Verdict::Unequal);
        v.insert(InvariantId::Omega(RefinementLevel::Round(3)), Verdict::Equal);
        v.insert(InvariantId::Omega(RefinementLevel::Round(2)), Verdict::Unequal);
        v.insert(InvariantId::Strong(Path::Float), Verdict::Equal);
        v.insert(InvariantId::Omega(RefinementLevel::ONE), Verdict::Unequal);
        v.insert(InvariantId::Wl2, Verdict::Skipped);
        let edges: Vec<String> = violations_in("p", &v).into_iter().map(|x| x.edge).collect();
        assert!(edges.contains(&"wl1 -> wm".to_string()));
        assert!(edges.contains(&"omega(*) -> omega(r) chain".to_string()));
        assert!(edges.contains(&"omega(1) <-> strong".to_string()));
        assert_eq!(edges.len(), 4, "{edges:?}");
    }
}
