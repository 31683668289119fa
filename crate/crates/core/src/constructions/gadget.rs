use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{srg_parameters, ColoredGraph, Graph, SrgParams};
use crate::refinement::{rounds_to_distinguish, Distinguish};

/// A graph with ordered, pairwise disjoint classes of port vertices.
/// Class `i` (0-based) carries color `i + 1`; all other vertices color 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortedGraph {
    pub graph: Graph,
    ports: Vec<Vec<usize>>,
}

impl PortedGraph {
    pub fn new(graph: Graph, ports: Vec<Vec<usize>>) -> Result<PortedGraph> {
        if ports.is_empty() {
            return Err(Error::PortMismatch("at least one port class is required".into()));
        }
        let n = graph.n();
        let mut seen = vec![false; n];
        for (i, class) in ports.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::PortMismatch(format!("port class {} is empty", i + 1)));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::PortMismatch(format!("vertex {v} is in two port classes")));
                }
            }
        }
        Ok(PortedGraph { graph, ports })
    }

    /// One singleton class per listed vertex, in order.
    pub fn singletons(graph: Graph, ports: &[usize]) -> Result<PortedGraph> {
        PortedGraph::new(graph, ports.iter().map(|&v| vec![v]).collect())
    }

    pub fn ports(&self) -> &[Vec<usize>] {
        &self.ports
    }

    /// Number of port classes.
    pub fn m(&self) -> usize {
        self.ports.len()
    }

    /// Every class is a single vertex.
    pub fn is_classic(&self) -> bool {
        self.ports.iter().all(|c| c.len() == 1)
    }

    pub fn colored(&self) -> ColoredGraph {
        ColoredGraph::with_classes(self.graph.clone(), &self.ports).expect("ports were validated")
    }
}

/// Where the pieces of a gadget graph live.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetLayout {
    /// Vertices `first_part.0 .. first_part.1` are the first part.
    pub first_part: (usize, usize),
    pub second_part: (usize, usize),
    /// `connecting[i]` is `c_{i+1}`.
    pub connecting: Vec<usize>,
    /// `pendants[i]` lists the `i + 1` pendants of `c_{i+1}`.
    pub pendants: Vec<Vec<usize>>,
}

/// `G = G(A′, B′)` and `H = G(A′, A′)`.
#[derive(Clone, Debug)]
pub struct GadgetPair {
    pub g: Graph,
    pub h: Graph,
    pub g_layout: GadgetLayout,
    pub h_layout: GadgetLayout,
}

fn compatible(a: &PortedGraph, b: &PortedGraph) -> Result<()> {
    if a.m() != b.m() {
        return Err(Error::PortMismatch(format!("{} port classes vs {}", a.m(), b.m())));
    }
    for (i, (ca, cb)) in a.ports.iter().zip(&b.ports).enumerate() {
        if ca.len() != cb.len() {
            return Err(Error::PortMismatch(format!("class {} has {} vertices vs {}", i + 1, ca.len(), cb.len())));
        }
    }
    Ok(())
}

/// The disjoint union of `a` and `b` plus, for each class `i` (1-based), a
/// connecting vertex adjacent to both copies of the class and `i` pendants.
fn join_parts(a: &PortedGraph, b: &PortedGraph) -> (Graph, GadgetLayout) {
    let (na, nb, m) = (a.graph.n(), b.graph.n(), a.m());
    let mut edges: Vec<(usize, usize)> = a.graph.edges().collect();
    edges.extend(b.graph.edges().map(|(x, y)| (x + na, y + na)));
    let connecting: Vec<usize> = (0..m).map(|i| na + nb + i).collect();
    let mut next = na + nb + m;
    let mut pendants = Vec::with_capacity(m);
    for i in 0..m {
        let c = connecting[i];
        edges.extend(a.ports[i].iter().map(|&v| (c, v)));
        edges.extend(b.ports[i].iter().map(|&v| (c, v + na)));
        let ps: Vec<usize> = (next..next + i + 1).collect();
        edges.extend(ps.iter().map(|&p| (c, p)));
        next += i + 1;
        pendants.push(ps);
    }
    let g = Graph::from_edges(next, edges).expect("gadget edges are valid");
    let layout = GadgetLayout { first_part: (0, na), second_part: (na, na + nb), connecting, pendants };
    (g, layout)
}

pub fn build_gadget(a: &PortedGraph, b: &PortedGraph) -> Result<GadgetPair> {
    compatible(a, b)?;
    let (g, g_layout) = join_parts(a, b);
    let (h, h_layout) = join_parts(a, a);
    Ok(GadgetPair { g, h, g_layout, h_layout })
}

/// Outcome of checking the hypotheses of the gadget lemma on `(A′, B′)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaMainReport {
    pub params_a: Option<SrgParams>,
    pub params_b: Option<SrgParams>,
    /// Both strongly regular with equal parameters.
    pub same_srg_params: bool,
    /// Every color occurs at most once per graph.
    pub classic: bool,
    /// Round-0 color multisets agree.
    pub colors_match: bool,
    /// First round of color refinement separating `A′` from `B′`.
    pub distinguishing_round: Option<Distinguish>,
}

impl LemmaMainReport {
    fn base_ok(&self) -> bool {
        self.same_srg_params && self.classic && self.colors_match
    }

    /// Whether the hypotheses of part 2 hold at level `r`: `r` rounds do
    /// not separate the colored graphs.
    pub fn holds_for(&self, r: usize) -> bool {
        self.base_ok()
            && r >= 1
            && match self.distinguishing_round {
                Some(Distinguish::At(k)) => k > r,
                Some(Distinguish::Never) => true,
                None => false,
            }
    }

    /// Whether color refinement separates `A′` and `B′` at all (part 1).
    pub fn separated(&self) -> bool {
        self.base_ok() && matches!(self.distinguishing_round, Some(Distinguish::At(_)))
    }
}

pub fn check_lemma_main_assumptions(a: &PortedGraph, b: &PortedGraph) -> LemmaMainReport {
    let params_a = srg_parameters(&a.graph);
    let params_b = srg_parameters(&b.graph);
    let same_srg_params = params_a.is_some() && params_a == params_b;
    let classic = a.is_classic() && b.is_classic();
    let (ca, cb) = (a.colored(), b.colored());
    let histogram = |c: &ColoredGraph| {
        let mut v = c.colors().to_vec();
        v.sort_unstable();
        v
    };
    let colors_match = a.graph.n() == b.graph.n() && histogram(&ca) == histogram(&cb);
    let distinguishing_round = rounds_to_distinguish(&ca, &cb).ok();
    LemmaMainReport { params_a, params_b, same_srg_params, classic, colors_match, distinguishing_round }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, generate, rook4x4, shrikhande, Family};

    #[test]
    fn sizes_and_degrees() {
        let a = PortedGraph::singletons(shrikhande(), &[0, 5]).unwrap();
        let b = PortedGraph::singletons(rook4x4(), &[0, 5]).unwrap();
        let pair = build_gadget(&a, &b).unwrap();
        assert_eq!(pair.g.n(), 16 + 16 + 2 + 3);
        assert_eq!(pair.h.n(), pair.g.n());
        for (i, c) in pair.g_layout.connecting.iter().enumerate() {
            assert_eq!(pair.g.degree(*c), 2 + i + 1);
            for &p in &pair.g_layout.pendants[i] {
                assert_eq!(pair.g.degree(p), 1);
                assert!(pair.g.has_edge(p, *c));
            }
        }
        assert!(pair.g.has_edge(32, 0) && pair.g.has_edge(32, 16));
    }

    #[test]
    fn generalized_classes() {
        let a = PortedGraph::new(generate(Family::Cycle(5)).unwrap(), vec![vec![0, 2]]).unwrap();
        let pair = build_gadget(&a, &a).unwrap();
        assert_eq!(pair.g.n(), 5 + 5 + 1 + 1);
        assert_eq!(pair.g.degree(10), 2 * 2 + 1);
        assert!(!a.is_classic());
    }

    #[test]
    fn swapping_parts_is_an_automorphism_of_h() {
        let a = PortedGraph::singletons(generate(Family::Cycle(7)).unwrap(), &[0, 3]).unwrap();
        let pair = build_gadget(&a, &a).unwrap();
        let n = pair.h.n();
        let perm: Vec<usize> = (0..n).map(|v| if v < 7 { v + 7 } else if v < 14 { v - 7 } else { v }).collect();
        assert_eq!(pair.h.permute(&perm).unwrap(), pair.h);
        assert!(are_isomorphic(&pair.g, &pair.h).unwrap());
    }

    #[test]
    fn bad_ports() {
        let c5 = generate(Family::Cycle(5)).unwrap();
        assert!(PortedGraph::new(c5.clone(), vec![]).is_err());
        assert!(PortedGraph::new(c5.clone(), vec![vec![]]).is_err());
        assert!(PortedGraph::new(c5.clone(), vec![vec![1], vec![1]]).is_err());
        assert!(PortedGraph::new(c5.clone(), vec![vec![7]]).is_err());
        let a = PortedGraph::singletons(c5.clone(), &[0]).unwrap();
        let b = PortedGraph::singletons(c5.clone(), &[0, 1]).unwrap();
        assert!(matches!(build_gadget(&a, &b), Err(Error::PortMismatch(_))));
        let b = PortedGraph::new(c5, vec![vec![0, 1]]).unwrap();
        assert!(matches!(build_gadget(&a, &b), Err(Error::PortMismatch(_))));
    }

    #[test]
    fn vertex_transitive_ports_are_never_separated() {
        let a = PortedGraph::singletons(shrikhande(), &[0]).unwrap();
        let b = PortedGraph::singletons(rook4x4(), &[0]).unwrap();
        let report = check_lemma_main_assumptions(&a, &b);
        assert!(report.same_srg_params && report.classic && report.colors_match);
        assert_eq!(report.distinguishing_round, Some(Distinguish::Never));
        assert!(report.holds_for(6));
        assert!(!report.separated());
    }
}
