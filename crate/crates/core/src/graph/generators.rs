use std::collections::BTreeSet;

use super::{ColorId, ColoredGraph, Graph};
use crate::error::{Error, Result};

/// Named graph families with their canonical vertex orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `C_n`, `i ~ i+1 (mod n)`; needs `n >= 3`.
    Cycle(usize),
    /// `P_n` on `n` vertices, `i ~ i+1`.
    Path(usize),
    Complete(usize),
    /// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
    CompleteBipartite(usize, usize),
    /// `K_{1,k}` with center `0`.
    Star(usize),
    Empty(usize),
}

pub fn generate(family: Family) -> Result<Graph> {
    match family {
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidSize { family: "cycle", detail: format!("n = {n}, need n >= 3") });
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Family::Complete(n) => Graph::from_edges(n, (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y)))),
        Family::CompleteBipartite(a, b) => {
            Graph::from_edges(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
        }
        Family::Star(k) => Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))),
        Family::Empty(n) => Graph::empty(n),
    }
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).filter(|&(x, y)| !g.has_edge(x, y));
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("complement of a valid graph")
}

/// `g ∪ h`: vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let edges = g.edges().chain(h.edges().map(|(x, y)| (x + off, y + off)));
    Graph::from_edges(g.n() + h.n(), edges.collect::<Vec<_>>()).expect("union of valid graphs")
}

/// `g * h`: disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut edges: Vec<_> = g.edges().chain(h.edges().map(|(x, y)| (x + off, y + off))).collect();
    for x in 0..g.n() {
        for y in 0..h.n() {
            edges.push((x, off + y));
        }
    }
    Graph::from_edges(g.n() + h.n(), edges).expect("join of valid graphs")
}

/// Replaces every edge by a path of length two. The subdivision vertex of
/// the `i`-th edge (in [`Graph::edges`] order) is `g.n() + i`.
pub fn subdivide_edges(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for (i, (x, y)) in g.edges().enumerate() {
        edges.push((x, n + i));
        edges.push((n + i, y));
    }
    Graph::from_edges(n + g.edge_count(), edges).expect("subdivision of a valid graph")
}

/// Gives `x` a fresh color (one larger than any color in use).
pub fn individualize(g: &ColoredGraph, x: usize) -> Result<ColoredGraph> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    let fresh: ColorId = g.colors().iter().copied().max().map_or(1, |c| c + 1);
    let mut colors = g.colors().to_vec();
    colors[x] = fresh;
    ColoredGraph::new(g.graph.clone(), colors)
}

/// Latin square graph: cells `(i, j)` numbered `i * m + j`, adjacent when
/// they share a row, a column, or a symbol.
pub fn latin_square_graph<R: AsRef<[u32]>>(square: &[R]) -> Result<Graph> {
    let m = square.len();
    let symbols: BTreeSet<u32> = square.first().map(|r| r.as_ref().iter().copied().collect()).unwrap_or_default();
    if m > 0 && symbols.len() != m {
        return Err(Error::NotLatinSquare("first row has repeated symbols".into()));
    }
    for (i, row) in square.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != m {
            return Err(Error::NotLatinSquare(format!("row {i} has length {}, expected {m}", row.len())));
        }
        let set: BTreeSet<u32> = row.iter().copied().collect();
        if set != symbols {
            return Err(Error::NotLatinSquare(format!("row {i} is not a permutation of the symbols")));
        }
    }
    for j in 0..m {
        let set: BTreeSet<u32> = square.iter().map(|r| r.as_ref()[j]).collect();
        if set != symbols {
            return Err(Error::NotLatinSquare(format!("column {j} is not a permutation of the symbols")));
        }
    }
    let cell = |v: usize| (v / m, v % m, square[v / m].as_ref()[v % m]);
    let mut edges = Vec::new();
    for u in 0..m * m {
        for v in u + 1..m * m {
            let (i, j, s) = cell(u);
            let (k, l, t) = cell(v);
            if i == k || j == l || s == t {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(m * m, edges)
}

/// Shrikhande graph: Cayley graph on `Z4 × Z4` with connection set
/// `{±(1,0), ±(0,1), ±(1,1)}`; vertex `(a, b)` is `4a + b`.
pub fn shrikhande() -> Graph {
    let id = |a: usize, b: usize| 4 * (a % 4) + (b % 4);
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                edges.push((id(a, b), id(a + da, b + db)));
            }
        }
    }
    Graph::from_edges(16, edges).expect("valid Cayley graph")
}

/// The 4×4 rook's graph `K4 □ K4`; vertex `(a, b)` is `4a + b`.
pub fn rook4x4() -> Graph {
    let mut edges = Vec::new();
    for u in 0..16 {
        for v in u + 1..16 {
            if (u / 4 == v / 4) != (u % 4 == v % 4) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(16, edges).expect("valid rook graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn families() {
        let c6 = generate(Family::Cycle(6)).unwrap();
        assert_eq!((c6.n(), c6.edge_count()), (6, 6));
        assert!(c6.degrees().iter().all(|&d| d == 2));
        let k33 = generate(Family::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(generate(Family::Complete(5)).unwrap().edge_count(), 10);
        assert_eq!(generate(Family::Path(4)).unwrap().edge_count(), 3);
        assert_eq!(generate(Family::Empty(4)).unwrap().edge_count(), 0);
        assert!(matches!(generate(Family::Cycle(2)), Err(Error::InvalidSize { .. })));
    }

    #[test]
    fn subdivided_star() {
        let t = subdivide_edges(&generate(Family::Star(3)).unwrap());
        assert_eq!(t.n(), 7);
        assert_eq!(t.edge_count(), 6);
        assert_eq!(sorted_degrees(&t), vec![3, 2, 2, 2, 1, 1, 1]);
        assert!(t.is_connected());
    }

    #[test]
    fn complement_union_join() {
        let k3 = generate(Family::Complete(3)).unwrap();
        assert_eq!(complement(&k3), generate(Family::Empty(3)).unwrap());
        let c3 = generate(Family::Cycle(3)).unwrap();
        let two = disjoint_union(&c3, &c3);
        assert_eq!((two.n(), two.edge_count()), (6, 6));
        assert!(!two.is_connected());
        let wheel = join(&generate(Family::Cycle(6)).unwrap(), &generate(Family::Complete(1)).unwrap());
        assert_eq!(wheel.n(), 7);
        assert_eq!(sorted_degrees(&wheel), vec![6, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn individualize_uses_fresh_color() {
        let g = ColoredGraph::uniform(generate(Family::Cycle(4)).unwrap());
        let gx = individualize(&g, 2).unwrap();
        assert_eq!(gx.colors(), &[0, 0, 1, 0]);
        assert!(gx.is_individualized(2));
        let gxy = individualize(&gx, 0).unwrap();
        assert_eq!(gxy.colors(), &[2, 0, 1, 0]);
        assert!(individualize(&g, 4).is_err());
    }

    #[test]
    fn latin_squares() {
        let k4 = latin_square_graph(&[vec![1, 2], vec![2, 1]]).unwrap();
        // brute force: every two of the four cells share a row, a column or a symbol
        assert_eq!(k4, generate(Family::Complete(4)).unwrap());
        assert_eq!(latin_square_graph(&[vec![7]]).unwrap(), Graph::empty(1).unwrap());
        assert!(latin_square_graph(&[vec![1, 2], vec![1, 2]]).is_err());
        assert!(latin_square_graph(&[vec![1, 1], vec![2, 2]]).is_err());
        assert!(latin_square_graph(&[vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn srg16_pair_basic_shape() {
        for g in [shrikhande(), rook4x4()] {
            assert_eq!((g.n(), g.edge_count()), (16, 48));
            assert!(g.degrees().iter().all(|&d| d == 6));
        }
    }
}
