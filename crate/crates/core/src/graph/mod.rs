//! Simple undirected graphs, vertex colorings, and the operations that build them.
//!
//! Vertices are the dense integers `0..n`. Fixtures that use 1-based or
//! coordinate labels document the mapping where they are defined.

mod generators;
mod graph6;
mod iso;
mod srg;
mod trees;

pub use generators::{
    complement, disjoint_union, generate, individualize, join, latin_square_graph, rook4x4, shrikhande,
    subdivide_edges, Family,
};
pub use graph6::{emit_graph6, parse_graph6};
pub use iso::{are_isomorphic, are_isomorphic_colored, ISO_VERTEX_CAP};
pub use srg::{srg_parameters, SrgParams};
pub use trees::{enumerate_free_trees, FreeTrees};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest vertex count accepted anywhere in the crate.
pub const MAX_VERTICES: usize = 1 << 16;

/// Simple undirected graph stored as sorted neighbor lists.
///
/// Immutable after construction; every constructor checks symmetry and the
/// absence of loops.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    nbrs: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { nbrs: vec![Vec::new(); n] })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (x, y) in edges {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if x == y {
                return Err(Error::SelfLoop(x));
            }
            g.nbrs[x].push(y);
            g.nbrs[y].push(x);
        }
        for list in &mut g.nbrs {
            list.sort_unstable();
            list.dedup();
        }
        Ok(g)
    }

    /// Builds a graph from a square 0/1 matrix, which must be symmetric with zero diagonal.
    pub fn from_adjacency<R: AsRef<[u8]>>(rows: &[R]) -> Result<Graph> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (x, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::Parse(format!("row {x} has {} entries, expected {n}", row.len())));
            }
            for (y, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(Error::Parse(format!("entry ({x}, {y}) is {v}, expected 0 or 1")));
                }
                if v != rows[y].as_ref()[x] {
                    return Err(Error::Asymmetric(x, y));
                }
                if x == y && v != 0 {
                    return Err(Error::SelfLoop(x));
                }
                if x < y && v == 1 {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    pub fn n(&self) -> usize {
        self.nbrs.len()
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.nbrs[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.nbrs[x].len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.nbrs[x].binary_search(&y).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(x, y)` with `x < y`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(x, list)| list.iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut m = vec![vec![0u8; n]; n];
        for (x, y) in self.edges() {
            m[x][y] = 1;
            m[y][x] = 1;
        }
        m
    }

    /// Relabels vertices: vertex `x` of `self` becomes vertex `perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::SizeMismatch(n, perm.len()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse("not a permutation".into()));
            }
        }
        Graph::from_edges(n, self.edges().map(|(x, y)| (perm[x], perm[y])))
    }

    pub fn random_permutation<R: Rng>(&self, rng: &mut R) -> Graph {
        let mut perm: Vec<usize> = (0..self.n()).collect();
        perm.shuffle(rng);
        self.permute(&perm).expect("shuffled identity is a permutation")
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut edges = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if rng.gen_bool(p) {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_edges(n, edges).expect("valid random edges")
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// Checks the structural invariants. Used by debug assertions and tests.
    pub fn check(&self) -> Result<()> {
        for (x, list) in self.nbrs.iter().enumerate() {
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Parse(format!("neighbor list of {x} not strictly sorted")));
                }
            }
            for &y in list {
                if y == x {
                    return Err(Error::SelfLoop(x));
                }
                if y >= self.n() {
                    return Err(Error::VertexOutOfRange { vertex: y, n: self.n() });
                }
                if !self.has_edge(y, x) {
                    return Err(Error::Asymmetric(x, y));
                }
            }
        }
        Ok(())
    }
}

pub type ColorId = u32;

/// A graph with a total vertex coloring. Color 0 is the default "uncolored" class.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredGraph {
    pub graph: Graph,
    colors: Vec<ColorId>,
}

impl ColoredGraph {
    pub fn uniform(graph: Graph) -> Self {
        let n = graph.n();
        ColoredGraph { graph, colors: vec![0; n] }
    }

    pub fn new(graph: Graph, colors: Vec<ColorId>) -> Result<Self> {
        if colors.len() != graph.n() {
            return Err(Error::ColoringLength { expected: graph.n(), got: colors.len() });
        }
        Ok(ColoredGraph { graph, colors })
    }

    /// Colors the listed vertex classes `1, 2, ...` in order; everything else keeps color 0.
    pub fn with_classes(graph: Graph, classes: &[Vec<usize>]) -> Result<Self> {
        let n = graph.n();
        let mut colors = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                colors[v] = i as ColorId + 1;
            }
        }
        Ok(ColoredGraph { graph, colors })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn color(&self, x: usize) -> ColorId {
        self.colors[x]
    }

    pub fn colors(&self) -> &[ColorId] {
        &self.colors
    }

    /// True if `x` is the only vertex of its color.
    pub fn is_individualized(&self, x: usize) -> bool {
        let c = self.colors[x];
        self.colors.iter().filter(|&&d| d == c).count() == 1
    }

    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let graph = self.graph.permute(perm)?;
        let mut colors = vec![0; self.n()];
        for (x, &p) in perm.iter().enumerate() {
            colors[p] = self.colors[x];
        }
        Ok(ColoredGraph { graph, colors })
    }
}

impl From<Graph> for ColoredGraph {
    fn from(g: Graph) -> Self {
        ColoredGraph::uniform(g)
    }
}
