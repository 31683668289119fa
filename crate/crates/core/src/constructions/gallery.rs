use num_bigint::BigUint;

use super::fixtures::{appendix_a_trees, parse_grid, Descriptor, APPENDIX_A_T, APPENDIX_A_T_PRIME, PAULUS_2502, PAULUS_2512};
use super::gadget::{build_gadget, GadgetPair, PortedGraph};
use crate::error::{Error, Result};
use crate::graph::{complement, disjoint_union, generate, rook4x4, shrikhande, subdivide_edges, Family, Graph};

/// Names accepted by [`gallery`].
pub const GALLERY: &[&str] = &[
    "c6_vs_2c3",
    "genspec7",
    "rattan_seppelt",
    "paulus_2512",
    "paulus_2512_search",
    "paulus_2512_r1",
    "paulus_2502",
    "shrikhande_rook",
    "appendix_a_walkmatrices",
];

/// Rows indexed by vertex, columns by walk length.
pub type WalkMatrix = Vec<Vec<BigUint>>;

/// A named pair of graphs, with the ported inputs for gadget entries and
/// the integer tables for the walk-matrix entry.
#[derive(Clone, Debug)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub g: Graph,
    pub h: Graph,
    pub ports: Option<(PortedGraph, PortedGraph)>,
    pub gadget: Option<GadgetPair>,
    pub tables: Option<(WalkMatrix, WalkMatrix)>,
}

impl GalleryEntry {
    fn pair(name: &'static str, description: &'static str, g: Graph, h: Graph) -> Self {
        GalleryEntry { name, description, g, h, ports: None, gadget: None, tables: None }
    }

    fn gadget(name: &'static str, description: &'static str, a: PortedGraph, b: PortedGraph) -> Result<Self> {
        let gadget = build_gadget(&a, &b)?;
        Ok(GalleryEntry {
            name,
            description,
            g: gadget.g.clone(),
            h: gadget.h.clone(),
            ports: Some((a, b)),
            gadget: Some(gadget),
            tables: None,
        })
    }
}

/// The 28-vertex pair with its vertex classes (shared by both graphs).
#[derive(Clone, Debug)]
pub struct RattanSeppelt {
    pub g: Graph,
    pub h: Graph,
    /// Hubs `u1, u2, v1, v2`.
    pub q: Vec<usize>,
    /// Vertices of the two hexagons.
    pub hexagon: Vec<usize>,
    /// Vertices of the four triangles.
    pub triangle: Vec<usize>,
}

/// Two copies of `C6 * K1` (hubs `u1`, `u2`) and two of `2C3 * K1` (hubs
/// `v1`, `v2`). `G` adds the cycle `u1 u2 v1 v2`, `H` the cycle `u1 v1 u2 v2`.
pub fn rattan_seppelt() -> RattanSeppelt {
    let mut base = Vec::new();
    let mut hubs = Vec::new();
    let (mut hexagon, mut triangle) = (Vec::new(), Vec::new());
    for part in 0..4 {
        let o = 7 * part;
        let rim: Vec<usize> = (o..o + 6).collect();
        let hub = o + 6;
        if part < 2 {
            base.extend((0..6).map(|i| (rim[i], rim[(i + 1) % 6])));
            hexagon.extend(&rim);
        } else {
            for t in [0, 3] {
                base.extend([(rim[t], rim[t + 1]), (rim[t + 1], rim[t + 2]), (rim[t + 2], rim[t])]);
            }
            triangle.extend(&rim);
        }
        base.extend(rim.iter().map(|&v| (v, hub)));
        hubs.push(hub);
    }
    let (u1, u2, v1, v2) = (hubs[0], hubs[1], hubs[2], hubs[3]);
    let cycle = |c: [usize; 4]| (0..4).map(move |i| (c[i], c[(i + 1) % 4]));
    let g = Graph::from_edges(28, base.iter().copied().chain(cycle([u1, u2, v1, v2]))).expect("valid");
    let h = Graph::from_edges(28, base.iter().copied().chain(cycle([u1, v1, u2, v2]))).expect("valid");
    RattanSeppelt { g, h, q: hubs, hexagon, triangle }
}

pub fn paulus_2512() -> Result<Graph> {
    Descriptor::parse(PAULUS_2512)?.graph()
}

pub fn paulus_2502() -> Result<Graph> {
    Descriptor::parse(PAULUS_2502)?.graph()
}

/// A coloring of P25.12 (`A1`, `B1`, `A2`, `B2`, `B2s`) or P25.02 (`A3`, `B3`).
pub fn paulus_ported(section: &str) -> Result<PortedGraph> {
    let text = if section.ends_with('3') { PAULUS_2502 } else { PAULUS_2512 };
    let d = Descriptor::parse(text)?;
    PortedGraph::new(d.graph()?, d.coloring(section)?)
}

/// Shrikhande and rook's graph, each with vertex 0 as the single port.
pub fn shrikhande_rook_ports() -> (PortedGraph, PortedGraph) {
    (
        PortedGraph::singletons(shrikhande(), &[0]).expect("valid port"),
        PortedGraph::singletons(rook4x4(), &[0]).expect("valid port"),
    )
}

pub fn gallery(name: &str) -> Result<GalleryEntry> {
    match name {
        "c6_vs_2c3" => {
            let c3 = generate(Family::Cycle(3))?;
            Ok(GalleryEntry::pair(
                "c6_vs_2c3",
                "hexagon against two triangles",
                generate(Family::Cycle(6))?,
                disjoint_union(&c3, &c3),
            ))
        }
        "genspec7" => Ok(GalleryEntry::pair(
            "genspec7",
            "C6 plus an isolated vertex against the subdivided claw",
            disjoint_union(&generate(Family::Cycle(6))?, &Graph::empty(1)?),
            subdivide_edges(&generate(Family::Star(3))?),
        )),
        "rattan_seppelt" => {
            let rs = rattan_seppelt();
            Ok(GalleryEntry::pair("rattan_seppelt", "28-vertex pair joined by two different 4-cycles of hubs", rs.g, rs.h))
        }
        "paulus_2512" => GalleryEntry::gadget(
            "paulus_2512",
            "gadget on P25.12 with the reference two-color ports, separated by color refinement in round 3",
            paulus_ported("A2")?,
            paulus_ported("B2")?,
        ),
        "paulus_2512_search" => GalleryEntry::gadget(
            "paulus_2512_search",
            "gadget on P25.12 with B2 blue moved to (3,3), separated by color refinement in round 4",
            paulus_ported("A2")?,
            paulus_ported("B2s")?,
        ),
        "paulus_2512_r1" => GalleryEntry::gadget(
            "paulus_2512_r1",
            "gadget on P25.12 with ports (1,i) against (i,1), separated in round 3",
            paulus_ported("A1")?,
            paulus_ported("B1")?,
        ),
        "paulus_2502" => GalleryEntry::gadget(
            "paulus_2502",
            "generalized gadget on P25.02 with one port class of size two",
            paulus_ported("A3")?,
            paulus_ported("B3")?,
        ),
        "shrikhande_rook" => {
            let (a, b) = shrikhande_rook_ports();
            GalleryEntry::gadget("shrikhande_rook", "gadget on Shrikhande and rook's graph with one port each", a, b)
        }
        "appendix_a_walkmatrices" => {
            let (t, t2) = appendix_a_trees()?;
            let mut e = GalleryEntry::pair(
                "appendix_a_walkmatrices",
                "19-vertex trees with equal eigenvalues and angles but different main angles",
                t,
                t2,
            );
            e.tables = Some((parse_grid(APPENDIX_A_T)?, parse_grid(APPENDIX_A_T_PRIME)?));
            Ok(e)
        }
        other => Err(Error::UnknownName(format!("gallery entry `{other}` (known: {})", GALLERY.join(", ")))),
    }
}

pub fn gallery_all() -> Result<Vec<GalleryEntry>> {
    GALLERY.iter().map(|n| gallery(n)).collect()
}

/// Complements of both graphs of an entry, used for generalized spectra.
pub fn complements(e: &GalleryEntry) -> (Graph, Graph) {
    (complement(&e.g), complement(&e.h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::check_lemma_main_assumptions;
    use crate::graph::{are_isomorphic, srg_parameters, SrgParams};
    use crate::refinement::Distinguish;
    use crate::walks::walk_table;

    #[test]
    fn every_entry_builds() {
        let all = gallery_all().unwrap();
        assert_eq!(all.len(), GALLERY.len());
        let sizes: Vec<usize> = all.iter().map(|e| e.g.n()).collect();
        assert_eq!(sizes, vec![6, 7, 28, 55, 55, 25 + 25 + 3 + 6, 52, 34, 19]);
        for e in &all {
            assert_eq!(e.g.n(), e.h.n(), "{}", e.name);
        }
        assert!(gallery("nope").is_err());
    }

    #[test]
    fn rattan_seppelt_walk_facts() {
        let rs = rattan_seppelt();
        for g in [&rs.g, &rs.h] {
            let t = walk_table(g, 3);
            let q: Vec<usize> = (0..28).filter(|&x| t.get(2, x, x) == 8u32.into()).collect();
            assert_eq!(q, rs.q);
            assert!(q.iter().all(|&x| g.degree(x) == 8));
            assert!(rs.triangle.iter().all(|&x| t.get(3, x, x) == 6u32.into()));
            assert!(rs.hexagon.iter().all(|&x| t.get(3, x, x) == 4u32.into()));
        }
        assert!(!are_isomorphic(&rs.g, &rs.h).unwrap());
    }

    fn rounds(a: &str, b: &str) -> Distinguish {
        let r = check_lemma_main_assumptions(&paulus_ported(a).unwrap(), &paulus_ported(b).unwrap());
        assert!(r.same_srg_params && r.colors_match);
        assert_eq!(r.classic, !a.ends_with('3'));
        r.distinguishing_round.unwrap()
    }

    fn swap_colors(p: &PortedGraph) -> PortedGraph {
        let mut classes = p.ports().to_vec();
        classes.reverse();
        PortedGraph::new(p.graph.clone(), classes).unwrap()
    }

    #[test]
    fn paulus_distinguishing_rounds() {
        assert_eq!(rounds("A1", "B1"), Distinguish::At(3));
        assert_eq!(rounds("A2", "B2"), Distinguish::At(3));
        assert_eq!(rounds("A2", "B2s"), Distinguish::At(4));
        assert_eq!(rounds("A3", "B3"), Distinguish::At(5));
        let (a, b) = shrikhande_rook_ports();
        assert_eq!(check_lemma_main_assumptions(&a, &b).distinguishing_round, Some(Distinguish::Never));
    }

    #[test]
    fn red_blue_assignment_does_not_change_rounds() {
        for (a, b) in [("A2", "B2"), ("A2", "B2s")] {
            let (pa, pb) = (paulus_ported(a).unwrap(), paulus_ported(b).unwrap());
            let straight = check_lemma_main_assumptions(&pa, &pb).distinguishing_round;
            let swapped = check_lemma_main_assumptions(&swap_colors(&pa), &swap_colors(&pb)).distinguishing_round;
            assert_eq!(straight, swapped, "{a}/{b}");
        }
    }

    #[test]
    fn srg_members() {
        let p = SrgParams { n: 25, d: 12, lambda: 5, mu: 6 };
        assert_eq!(srg_parameters(&paulus_2512().unwrap()), Some(p));
        assert_eq!(srg_parameters(&paulus_2502().unwrap()), Some(p));
        let (a, b) = shrikhande_rook_ports();
        let q = SrgParams { n: 16, d: 6, lambda: 2, mu: 2 };
        assert_eq!((srg_parameters(&a.graph), srg_parameters(&b.graph)), (Some(q), Some(q)));
    }
}
