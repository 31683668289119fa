//! Exact isomorphism test by individualization and color refinement.
//!
//! Both graphs are refined jointly with one shared color table, so equal
//! colors mean the same thing on either side. A branch dies as soon as the
//! color histograms differ; when every cell is a singleton the induced
//! bijection is checked edge by edge.

use std::collections::HashMap;

use super::{ColorId, ColoredGraph, Graph};
use crate::error::{Error, Result};

/// Largest vertex count the oracle accepts.
pub const ISO_VERTEX_CAP: usize = 64;

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    are_isomorphic_colored(&ColoredGraph::uniform(g.clone()), &ColoredGraph::uniform(h.clone()))
}

/// Isomorphism that must map each vertex to one of the same color.
pub fn are_isomorphic_colored(g: &ColoredGraph, h: &ColoredGraph) -> Result<bool> {
    if g.n() != h.n() || g.graph.edge_count() != h.graph.edge_count() {
        return Ok(false);
    }
    let n = g.n();
    if n > ISO_VERTEX_CAP {
        return Err(Error::SizeCap { what: "isomorphism oracle", cap: ISO_VERTEX_CAP, n });
    }
    let mut gd = g.graph.degrees();
    let mut hd = h.graph.degrees();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return Ok(false);
    }
    Ok(search(&g.graph, &h.graph, g.colors().to_vec(), h.colors().to_vec()))
}

fn search(g: &Graph, h: &Graph, gc: Vec<ColorId>, hc: Vec<ColorId>) -> bool {
    let (gc, hc) = joint_refine(g, h, &gc, &hc);
    let mut hist: HashMap<ColorId, (usize, usize)> = HashMap::new();
    for &c in &gc {
        hist.entry(c).or_default().0 += 1;
    }
    for &c in &hc {
        hist.entry(c).or_default().1 += 1;
    }
    if hist.values().any(|&(a, b)| a != b) {
        return false;
    }
    let target = hist.iter().filter(|(_, &(a, _))| a > 1).min_by_key(|(&c, &(a, _))| (a, c)).map(|(&c, _)| c);
    let Some(cell) = target else {
        let mut map = vec![0usize; g.n()];
        let mut by_color: HashMap<ColorId, usize> = HashMap::new();
        for (u, &c) in hc.iter().enumerate() {
            by_color.insert(c, u);
        }
        for (v, c) in gc.iter().enumerate() {
            map[v] = by_color[c];
        }
        return g.edges().all(|(x, y)| h.has_edge(map[x], map[y]));
    };
    let fresh = gc.iter().chain(&hc).copied().max().unwrap_or(0) + 1;
    let v = gc.iter().position(|&c| c == cell).expect("cell is nonempty");
    let mut gx = gc.clone();
    gx[v] = fresh;
    for u in (0..h.n()).filter(|&u| hc[u] == cell) {
        let mut hx = hc.clone();
        hx[u] = fresh;
        if search(g, h, gx.clone(), hx) {
            return true;
        }
    }
    false
}

/// Classical color refinement on `g ⊔ h` with shared interning, run until
/// the joint partition is stable.
fn joint_refine(g: &Graph, h: &Graph, gc: &[ColorId], hc: &[ColorId]) -> (Vec<ColorId>, Vec<ColorId>) {
    let mut table: HashMap<ColorId, ColorId> = HashMap::new();
    let mut intern0 = |c: ColorId| {
        let next = table.len() as ColorId;
        *table.entry(c).or_insert(next)
    };
    let mut gc: Vec<ColorId> = gc.iter().map(|&c| intern0(c)).collect();
    let mut hc: Vec<ColorId> = hc.iter().map(|&c| intern0(c)).collect();
    let mut classes = table.len();
    loop {
        let mut table: HashMap<(ColorId, Vec<ColorId>), ColorId> = HashMap::new();
        let mut step = |graph: &Graph, colors: &[ColorId]| -> Vec<ColorId> {
            (0..graph.n())
                .map(|x| {
                    let mut nb: Vec<ColorId> = graph.neighbors(x).iter().map(|&y| colors[y]).collect();
                    nb.sort_unstable();
                    let next = table.len() as ColorId;
                    *table.entry((colors[x], nb)).or_insert(next)
                })
                .collect()
        };
        let ng = step(g, &gc);
        let nh = step(h, &hc);
        let count = table.len();
        gc = ng;
        hc = nh;
        if count == classes {
            return (gc, hc);
        }
        classes = count;
    }
}
