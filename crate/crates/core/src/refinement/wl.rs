use std::collections::HashSet;

use super::{colors_at, AdjacencyColoring, DigestNamer, ExactNamer, Namer, RefinementLevel, Seeds};
use crate::code::{CanonicalCode, Encoder};
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// Largest vertex count for 2-WL (`n²` colors, `n³` work per round).
pub const WL2_VERTEX_CAP: usize = 64;

fn seeds(g: &ColoredGraph, marked: Option<usize>) -> Seeds<'_> {
    Seeds { colors: g.colors(), marked }
}

/// Stable 1-WL colors of `g` (with `marked` individualized).
fn stable_wl1<N: Namer>(namer: &mut N, g: &ColoredGraph, marked: Option<usize>) -> Vec<N::Color> {
    colors_at(namer, &AdjacencyColoring(&g.graph), seeds(g, marked), RefinementLevel::Stable)
}

/// Names the stable multiset `{{colors}}` itself.
fn name_multiset<N: Namer>(namer: &mut N, colors: &[N::Color]) -> N::Color {
    let code = namer.multiset_code(colors);
    namer.leaf(code.as_bytes())
}

/// Stable color refinement invariant.
pub fn wl1(g: &ColoredGraph) -> CanonicalCode {
    let mut namer = DigestNamer::default();
    let colors = stable_wl1(&mut namer, g, None);
    namer.multiset_code(&colors)
}

pub fn wl1_equivalent(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    if g.n() != h.n() {
        return false;
    }
    let mut namer = ExactNamer::new();
    let a = stable_wl1(&mut namer, g, None);
    let b = stable_wl1(&mut namer, h, None);
    name_multiset(&mut namer, &a) == name_multiset(&mut namer, &b)
}

/// `wl1(G_x)` for every vertex `x`, in vertex order.
pub fn individualized_wl1(g: &ColoredGraph) -> Vec<CanonicalCode> {
    let mut namer = DigestNamer::default();
    (0..g.n())
        .map(|x| {
            let colors = stable_wl1(&mut namer, g, Some(x));
            namer.multiset_code(&colors)
        })
        .collect()
}

/// `{{ wl1(G_x) : x ∈ V }}`; every `x` gets the same fresh color.
pub fn wl32(g: &ColoredGraph) -> CanonicalCode {
    CanonicalCode::multiset(individualized_wl1(g).iter().map(|c| CanonicalCode::digest_code(&c.digest())))
}

pub fn wl32_equivalent(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    if g.n() != h.n() {
        return false;
    }
    let mut namer = ExactNamer::new();
    let mut per_vertex = |k: &ColoredGraph| {
        let mut ids: Vec<u32> = (0..k.n())
            .map(|x| {
                let colors = stable_wl1(&mut namer, k, Some(x));
                name_multiset(&mut namer, &colors)
            })
            .collect();
        ids.sort_unstable();
        ids
    };
    let a = per_vertex(g);
    let b = per_vertex(h);
    a == b
}

/// Stable 2-WL pair colors, row-major.
fn wl2_colors<N: Namer>(namer: &mut N, g: &ColoredGraph) -> Vec<N::Color> {
    let n = g.n();
    let mut enc = Encoder::new();
    let mut colors: Vec<N::Color> = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            enc.clear();
            enc.open_tuple();
            enc.uint(if x == y { 2 } else { g.graph.has_edge(x, y) as u128 });
            enc.uint(g.color(x) as u128);
            enc.uint(g.color(y) as u128);
            enc.close();
            colors.push(namer.leaf(enc.bytes()));
        }
    }
    let mut classes = colors.iter().collect::<HashSet<_>>().len();
    let mut members = Vec::with_capacity(n);
    loop {
        let next: Vec<N::Color> = (0..n * n)
            .map(|xy| {
                let (x, y) = (xy / n, xy % n);
                members.clear();
                members.extend((0..n).map(|z| (colors[x * n + z], colors[z * n + y])));
                namer.round(colors[xy], &mut members)
            })
            .collect();
        let count = next.iter().collect::<HashSet<_>>().len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

fn check_wl2_cap(g: &ColoredGraph) -> Result<()> {
    if g.n() > WL2_VERTEX_CAP {
        return Err(Error::SizeCap { what: "2-WL", cap: WL2_VERTEX_CAP, n: g.n() });
    }
    Ok(())
}

/// Stable 2-WL invariant: the multiset of stable pair colors. Seeds are
/// `(2 on the diagonal else A(x, y), c(x), c(y))`.
pub fn wl2(g: &ColoredGraph) -> Result<CanonicalCode> {
    check_wl2_cap(g)?;
    let mut namer = DigestNamer::default();
    let colors = wl2_colors(&mut namer, g);
    Ok(namer.multiset_code(&colors))
}

pub fn wl2_equivalent(g: &ColoredGraph, h: &ColoredGraph) -> Result<bool> {
    check_wl2_cap(g)?;
    check_wl2_cap(h)?;
    if g.n() != h.n() {
        return Ok(false);
    }
    let mut namer = ExactNamer::new();
    let mut a = wl2_colors(&mut namer, g);
    let mut b = wl2_colors(&mut namer, h);
    a.sort_unstable();
    b.sort_unstable();
    Ok(a == b)
}
