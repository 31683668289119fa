//! Free (unlabeled) tree enumeration by the Wright–Richmond–Odlyzko–McKay
//! successor method, in constant amortized time per tree.
//!
//! A tree is held as a level sequence: a preorder listing of vertex depths
//! for a rooted tree, with the root at depth 0. Trees are generated as
//! canonical rooted-at-center layouts; the successor of a rooted layout is the
//! Beyer–Hedetniemi step, and invalid (non-canonical) layouts are skipped by
//! jumping directly to the next candidate.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_TREE_ORDER: usize = 20;

/// Iterator over one representative per isomorphism class of trees on `n` vertices.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
    single: bool,
}

pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::InvalidSize { family: "free trees", detail: format!("n = {n}, need 1 <= n <= {MAX_TREE_ORDER}") });
    }
    let layout = (n >= 2).then(|| (0..n / 2 + 1).chain(1..n.div_ceil(2)).collect());
    Ok(FreeTrees { n, layout, single: n == 1 })
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single {
            self.single = false;
            return Some(Graph::empty(1).expect("one vertex"));
        }
        let candidate = self.layout.take()?;
        let tree = next_tree(candidate);
        let g = layout_to_graph(&tree);
        debug_assert_eq!(g.n(), self.n);
        self.layout = next_rooted_tree(&tree, None);
        Some(g)
    }
}

/// Beyer–Hedetniemi successor of a rooted level sequence; `None` after the last one.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Returns `candidate` if it is a canonical free-tree layout, otherwise the next
/// candidate after skipping the invalid block.
fn next_tree(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p)).expect("p >= 1 for layouts of order >= 2");
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (i, v) in (1..h + 2).enumerate() {
            next[len - (h + 1) + i] = v;
        }
    }
    next
}

/// Splits a layout into the leftmost root subtree (depths shifted up by one)
/// and the remainder re-rooted at depth 0.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().filter(|&(_, &d)| d == 1).nth(1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Each vertex's parent is the most recent earlier vertex one level up.
fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (i, &d) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= d {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), edges).expect("level sequences describe trees")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    /// Labeled trees via Prüfer sequences, deduplicated by the isomorphism oracle.
    fn brute_force_classes(n: usize) -> Vec<Graph> {
        let mut classes: Vec<Graph> = Vec::new();
        if n <= 2 {
            return vec![Graph::from_edges(n, (n == 2).then_some((0, 1))).unwrap()];
        }
        let mut seq = vec![0usize; n - 2];
        loop {
            let t = prufer_decode(&seq, n);
            if !classes.iter().any(|c| c.degrees().iter().sum::<usize>() == t.degrees().iter().sum::<usize>() && are_isomorphic(c, &t).unwrap()) {
                classes.push(t);
            }
            let mut i = 0;
            loop {
                if i == seq.len() {
                    return classes;
                }
                seq[i] += 1;
                if seq[i] < n {
                    break;
                }
                seq[i] = 0;
                i += 1;
            }
        }
    }

    fn prufer_decode(seq: &[usize], n: usize) -> Graph {
        let mut degree = vec![1usize; n];
        for &s in seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((last[0], last[1]));
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn known_counts() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            let trees: Vec<Graph> = enumerate_free_trees(n).unwrap().collect();
            assert_eq!(trees.len(), count, "n = {n}");
            for t in &trees {
                assert_eq!(t.n(), n);
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    /// AHU encoding rooted at the center (minimum over both centers when bicentral).
    fn tree_canon(t: &Graph) -> String {
        fn enc(t: &Graph, v: usize, parent: usize) -> String {
            let mut kids: Vec<String> = t.neighbors(v).iter().filter(|&&u| u != parent).map(|&u| enc(t, u, v)).collect();
            kids.sort();
            format!("({})", kids.concat())
        }
        let n = t.n();
        let mut deg = t.degrees();
        let mut alive: Vec<usize> = (0..n).collect();
        let mut removed = vec![false; n];
        while alive.len() > 2 {
            let leaves: Vec<usize> = alive.iter().copied().filter(|&v| deg[v] <= 1).collect();
            for &l in &leaves {
                removed[l] = true;
                for &u in t.neighbors(l) {
                    if !removed[u] {
                        deg[u] -= 1;
                    }
                }
            }
            alive.retain(|&v| !removed[v]);
        }
        alive.iter().map(|&c| enc(t, c, usize::MAX)).min().unwrap()
    }

    /// Every tree on `n + 1` vertices is a tree on `n` vertices plus a leaf.
    fn leaf_extension_classes(n: usize) -> std::collections::BTreeSet<String> {
        let mut level = vec![Graph::empty(1).unwrap()];
        for m in 1..n {
            let mut seen = std::collections::BTreeMap::new();
            for t in &level {
                for v in 0..m {
                    let g = Graph::from_edges(m + 1, t.edges().chain([(v, m)])).unwrap();
                    seen.entry(tree_canon(&g)).or_insert(g);
                }
            }
            level = seen.into_values().collect();
        }
        level.iter().map(tree_canon).collect()
    }

    #[test]
    fn matches_leaf_extension_oracle_up_to_ten() {
        for n in 1..=10 {
            let canon: Vec<String> = enumerate_free_trees(n).unwrap().map(|t| tree_canon(&t)).collect();
            let distinct: std::collections::BTreeSet<String> = canon.iter().cloned().collect();
            assert_eq!(distinct.len(), canon.len(), "duplicate class at n = {n}");
            assert_eq!(distinct, leaf_extension_classes(n), "n = {n}");
        }
    }

    #[test]
    fn matches_labeled_brute_force_up_to_seven() {
        for n in 1..=7 {
            let trees: Vec<Graph> = enumerate_free_trees(n).unwrap().collect();
            let classes = brute_force_classes(n);
            assert_eq!(trees.len(), classes.len(), "n = {n}");
            for t in &trees {
                let hits = classes.iter().filter(|c| are_isomorphic(c, t).unwrap()).count();
                assert_eq!(hits, 1, "n = {n}");
            }
        }
    }

    #[test]
    fn range_is_checked() {
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees(21).is_err());
    }

    #[test]
    fn n4_is_path_and_star() {
        let mut degs: Vec<Vec<usize>> = enumerate_free_trees(4)
            .unwrap()
            .map(|t| {
                let mut d = t.degrees();
                d.sort_unstable();
                d
            })
            .collect();
        degs.sort();
        assert_eq!(degs, vec![vec![1, 1, 1, 3], vec![1, 1, 2, 2]]);
    }
}
