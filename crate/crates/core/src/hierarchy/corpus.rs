use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::invariant::{invariant_code, verdicts, InvariantId, Verdict};
use super::report::{compare_pair, SeparationCertificate};
use crate::code::CanonicalCode;
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, enumerate_free_trees, Graph};

/// Largest order for [`all_graphs`].
pub const ALL_GRAPHS_CAP: usize = 8;

/// A finite source of graphs.
#[derive(Clone, Debug, PartialEq)]
pub enum Corpus {
    /// `trees:N`: one tree per isomorphism class on `N` vertices.
    Trees(usize),
    /// `all:N`: one graph per isomorphism class on `1 ..= N` vertices.
    All(usize),
    /// `random:COUNT:N:P:SEED`: `COUNT` samples of `G(N, P)`.
    Random { count: usize, n: usize, p: f64, seed: u64 },
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| t.parse::<usize>().map_err(|e| Error::Parse(format!("corpus {s:?}: {e}")));
        match parts.as_slice() {
            ["trees", n] => Ok(Corpus::Trees(num(n)?)),
            ["all", n] => Ok(Corpus::All(num(n)?)),
            ["random", count, n, p, seed] => {
                let p: f64 = p.parse().map_err(|e| Error::Parse(format!("corpus {s:?}: {e}")))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::Parse(format!("corpus {s:?}: edge probability outside [0, 1]")));
                }
                let seed = seed.parse().map_err(|e| Error::Parse(format!("corpus {s:?}: {e}")))?;
                Ok(Corpus::Random { count: num(count)?, n: num(n)?, p, seed })
            }
            _ => Err(Error::Parse(format!("corpus {s:?}: expected trees:N, all:N or random:COUNT:N:P:SEED"))),
        }
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corpus::Trees(n) => write!(f, "trees:{n}"),
            Corpus::All(n) => write!(f, "all:{n}"),
            Corpus::Random { count, n, p, seed } => write!(f, "random:{count}:{n}:{p}:{seed}"),
        }
    }
}

impl Corpus {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match *self {
            Corpus::Trees(n) => Ok(enumerate_free_trees(n)?.collect()),
            Corpus::All(n) => {
                let mut out = Vec::new();
                for k in 1..=n {
                    out.extend(all_graphs(k)?);
                }
                Ok(out)
            }
            Corpus::Random { count, n, p, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok((0..count).map(|_| Graph::random(n, p, &mut rng)).collect())
            }
        }
    }
}

/// Upper-triangle bits of `adj` relabeled by `order` (`order[i]` is the old
/// vertex placed at position `i`).
fn key_of(adj: &[u32], order: &[usize]) -> u64 {
    let n = order.len();
    let mut key = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            key = (key << 1) | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    key
}

/// Largest key over the relabelings that list vertices by non-increasing
/// degree. That set of relabelings is itself isomorphism invariant, so the
/// result is a canonical form.
fn canonical_key(adj: &[u32]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut s = 0;
    for i in 1..=n {
        if i == n || deg[order[i]] != deg[order[s]] {
            cells.push((s, i));
            s = i;
        }
    }
    let mut best = 0;
    permute_cells(adj, &order, &cells, 0, &mut best);
    best
}

fn permute_cells(adj: &[u32], order: &[usize], cells: &[(usize, usize)], c: usize, best: &mut u64) {
    let Some(&(lo, hi)) = cells.get(c) else {
        *best = (*best).max(key_of(adj, order));
        return;
    };
    heap_permutations(&mut order[lo..hi].to_vec(), hi - lo, &mut |cell: &[usize]| {
        let mut next = order.to_vec();
        next[lo..hi].copy_from_slice(cell);
        permute_cells(adj, &next, cells, c + 1, best);
    });
}

fn heap_permutations(a: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(a, k - 1, visit);
        a.swap(if k.is_multiple_of(2) { i } else { 0 }, k - 1);
    }
    heap_permutations(a, k - 1, visit);
}

fn graph_from_key(n: usize, key: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * (n - 1) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if key >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid key")
}

/// One graph per isomorphism class on exactly `n` vertices, obtained by
/// adding a vertex in every possible way to the classes on `n - 1`.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=ALL_GRAPHS_CAP).contains(&n) {
        return Err(Error::InvalidSize { family: "all graphs", detail: format!("n = {n}, need 1 <= n <= {ALL_GRAPHS_CAP}") });
    }
    let mut level: Vec<u64> = vec![0];
    for k in 2..=n {
        let prev = k - 1;
        let next: HashSet<u64> = level
            .par_iter()
            .flat_map_iter(|&key| {
                let g = graph_from_key(prev, key);
                let mut adj: Vec<u32> =
                    (0..prev).map(|x| g.neighbors(x).iter().fold(0u32, |m, &y| m | 1 << y)).collect();
                adj.push(0);
                (0u32..1 << prev).map(move |mask| {
                    let mut a = adj.clone();
                    a[prev] = mask;
                    for (y, row) in a.iter_mut().enumerate().take(prev) {
                        *row |= (mask >> y & 1) << prev;
                    }
                    canonical_key(&a)
                })
            })
            .collect();
        level = next.into_iter().collect();
    }
    level.sort_unstable();
    Ok(level.into_iter().map(|k| graph_from_key(n, k)).collect())
}

fn pair_id(g: &Graph, h: &Graph) -> (String, String) {
    let a = String::from_utf8(emit_graph6(g)).expect("graph6 is ASCII");
    let b = String::from_utf8(emit_graph6(h)).expect("graph6 is ASCII");
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// All pairs of the corpus equal under `equal_under` and unequal under
/// `differ_under`. Graphs are bucketed by their `equal_under` code, so only
/// pairs inside a bucket are compared, and every equality is confirmed by
/// the exact pairwise verdict. Certificates are sorted by pair id, which
/// makes the result independent of corpus order.
pub fn mine_corpus(corpus: &[Graph], equal_under: InvariantId, differ_under: InvariantId) -> Result<Vec<SeparationCertificate>> {
    let codes: Vec<CanonicalCode> = corpus.par_iter().map(|g| invariant_code(equal_under, g)).collect::<Result<_>>()?;
    let mut buckets: BTreeMap<&CanonicalCode, Vec<usize>> = BTreeMap::new();
    for (i, c) in codes.iter().enumerate() {
        buckets.entry(c).or_default().push(i);
    }
    let candidates: Vec<(usize, usize)> = buckets
        .values()
        .filter(|b| b.len() > 1)
        .flat_map(|b| (0..b.len()).flat_map(move |i| (i + 1..b.len()).map(move |j| (b[i], b[j]))))
        .collect();
    let ids = [equal_under, differ_under];
    let mut found: Vec<((String, String), SeparationCertificate)> = candidates
        .par_iter()
        .filter_map(|&(i, j)| {
            let (g, h) = (&corpus[i], &corpus[j]);
            let v = verdicts(g, h, &ids);
            if v[&equal_under] != Verdict::Equal || v[&differ_under] != Verdict::Unequal {
                return None;
            }
            let (a, b) = pair_id(g, h);
            let mut cert = compare_pair(&format!("{a} {b}"), g, h, &ids);
            cert.expect(&[(equal_under, Verdict::Equal), (differ_under, Verdict::Unequal)]);
            Some(((a, b), cert))
        })
        .collect();
    found.sort_by(|x, y| x.0.cmp(&y.0));
    found.dedup_by(|x, y| x.0 == y.0);
    Ok(found.into_iter().map(|(_, c)| c).collect())
}
