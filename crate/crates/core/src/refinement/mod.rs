//! Generic refinement of a vertex coloring by an arbitrary pair coloring,
//! and the Weisfeiler–Leman algorithms built on it.
//!
//! For a pair coloring `χ` on `V²` the vertex colorings are
//!
//! ```text
//! χ_0(x)     = (χ(x, x), c(x))
//! χ_{1/2}(x) = (χ_0(x), {{ χ(x, y) : y ∈ V }})
//! χ_{r+1}(x) = (χ_r(x), {{ (χ(x, y), χ_r(y)) : y ∈ V }})
//! ```
//!
//! where `c` is the vertex coloring of the input graph. The level invariant
//! is the multiset `{{χ_r(x)}}`. The stable level `•` is the first round `t`
//! at which the number of classes equals that of round `t − 1`. Two graphs
//! whose round-`t` codes agree and which are both stable at `t` agree at
//! every later round, and graphs that agree at every round stabilize at the
//! same round, so stable codes computed separately are comparable.
//!
//! Reported codes use SHA-256 digests for nested colors. Every `*_equivalent`
//! function decides with exact interning instead, which involves no hashing.

mod namer;
mod wl;

pub use namer::{DigestNamer, ExactNamer, FullNamer, Namer};
pub use wl::{individualized_wl1, wl1, wl1_equivalent, wl2, wl2_equivalent, wl32, wl32_equivalent, WL2_VERTEX_CAP};

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::code::{CanonicalCode, Encoder};
use crate::error::{Error, Result};
use crate::graph::{ColorId, ColoredGraph, Graph};

/// A refinement level: `0 < 1/2 < 1 < 2 < … < •`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RefinementLevel {
    Half,
    Round(u32),
    Stable,
}

impl RefinementLevel {
    pub const ZERO: RefinementLevel = RefinementLevel::Round(0);
    pub const ONE: RefinementLevel = RefinementLevel::Round(1);

    fn rank(self) -> u64 {
        match self {
            RefinementLevel::Round(r) => 2 * r as u64,
            RefinementLevel::Half => 1,
            RefinementLevel::Stable => u64::MAX,
        }
    }
}

impl PartialOrd for RefinementLevel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RefinementLevel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for RefinementLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefinementLevel::Half => f.write_str("1/2"),
            RefinementLevel::Round(r) => write!(f, "{r}"),
            RefinementLevel::Stable => f.write_str("•"),
        }
    }
}

impl FromStr for RefinementLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1/2" | "½" | "0.5" | "half" => Ok(RefinementLevel::Half),
            "•" | "*" | "bullet" | "stable" | "inf" => Ok(RefinementLevel::Stable),
            t => t
                .parse::<u32>()
                .map(RefinementLevel::Round)
                .map_err(|_| Error::Parse(format!("unknown refinement level {s:?}"))),
        }
    }
}

impl Serialize for RefinementLevel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RefinementLevel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// An isomorphism-invariant coloring of ordered vertex pairs.
///
/// `encode_pair` must write a canonical encoding: equal encodings across two
/// graphs mean equal abstract colors.
pub trait PairColoring {
    fn vertex_count(&self) -> usize;
    fn encode_pair(&self, x: usize, y: usize, enc: &mut Encoder);
}

/// `χ(x, x) = 2`, `χ(x, y) = A(x, y)` otherwise. With the vertex colors of the
/// seed this is classical color refinement.
#[derive(Clone, Copy, Debug)]
pub struct AdjacencyColoring<'a>(pub &'a Graph);

impl PairColoring for AdjacencyColoring<'_> {
    fn vertex_count(&self) -> usize {
        self.0.n()
    }

    fn encode_pair(&self, x: usize, y: usize, enc: &mut Encoder) {
        enc.uint(if x == y { 2 } else { self.0.has_edge(x, y) as u128 });
    }
}

/// Vertex colors entering the seed; `marked` is individualized with a color
/// shared by all graphs and distinct from every integer color.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Seeds<'a> {
    pub colors: &'a [ColorId],
    pub marked: Option<usize>,
}

impl Seeds<'_> {
    pub fn encode(&self, x: usize, enc: &mut Encoder) {
        if self.marked == Some(x) {
            enc.symbol("individualized");
        } else {
            enc.uint(self.colors[x] as u128);
        }
    }
}

/// Round-by-round state of one refinement.
pub(crate) struct Run<C> {
    n: usize,
    pairs: Vec<C>,
    seeds: Vec<C>,
    pub colors: Vec<C>,
    pub round: usize,
    classes: usize,
    pub stable: bool,
}

impl<C: Copy + Eq + std::hash::Hash> Run<C> {
    pub fn start<N, P>(namer: &mut N, chi: &P, seeds: Seeds<'_>) -> Run<C>
    where
        N: Namer<Color = C>,
        P: PairColoring + ?Sized,
    {
        Self::start_with(namer, chi, seeds, true)
    }

    /// With `all_pairs == false` only diagonal pair colors are named, which
    /// is all that level 0 needs.
    fn start_with<N, P>(namer: &mut N, chi: &P, seeds: Seeds<'_>, all_pairs: bool) -> Run<C>
    where
        N: Namer<Color = C>,
        P: PairColoring + ?Sized,
    {
        let n = chi.vertex_count();
        assert_eq!(n, seeds.colors.len(), "pair coloring and vertex coloring disagree on n");
        let mut enc = Encoder::new();
        let mut name_pair = |namer: &mut N, x: usize, y: usize| {
            enc.clear();
            chi.encode_pair(x, y, &mut enc);
            namer.leaf(enc.bytes())
        };
        let diag: Vec<C> = (0..n).map(|x| name_pair(namer, x, x)).collect();
        let mut pairs = Vec::new();
        if all_pairs {
            pairs.reserve(n * n);
            for x in 0..n {
                for y in 0..n {
                    pairs.push(if x == y { diag[x] } else { name_pair(namer, x, y) });
                }
            }
        }
        let mut enc = Encoder::new();
        let seeds_c: Vec<C> = (0..n)
            .map(|x| {
                enc.clear();
                enc.open_tuple();
                namer.write(diag[x], &mut enc);
                seeds.encode(x, &mut enc);
                enc.close();
                namer.leaf(enc.bytes())
            })
            .collect();
        let classes = distinct(&seeds_c);
        Run { n, pairs, colors: seeds_c.clone(), seeds: seeds_c, round: 0, classes, stable: false }
    }

    pub fn step<N: Namer<Color = C>>(&mut self, namer: &mut N) {
        let n = self.n;
        let mut members = Vec::with_capacity(n);
        let next: Vec<C> = (0..n)
            .map(|x| {
                members.clear();
                members.extend((0..n).map(|y| (self.pairs[x * n + y], self.colors[y])));
                namer.round(self.colors[x], &mut members)
            })
            .collect();
        let classes = distinct(&next);
        self.stable = classes == self.classes;
        self.classes = classes;
        self.colors = next;
        self.round += 1;
    }

    pub fn half<N: Namer<Color = C>>(&self, namer: &mut N) -> Vec<C> {
        let n = self.n;
        (0..n)
            .map(|x| {
                let mut members: Vec<C> = self.pairs[x * n..(x + 1) * n].to_vec();
                namer.half(self.seeds[x], &mut members)
            })
            .collect()
    }

    /// Refines until `level`; returns the colors and the last round run.
    pub fn into_level<N: Namer<Color = C>>(mut self, namer: &mut N, level: RefinementLevel) -> (Vec<C>, usize) {
        match level {
            RefinementLevel::Half => (self.half(namer), 0),
            RefinementLevel::Round(r) => {
                while self.round < r as usize {
                    self.step(namer);
                }
                (self.colors, self.round)
            }
            RefinementLevel::Stable => {
                while !self.stable {
                    self.step(namer);
                }
                (self.colors, self.round)
            }
        }
    }
}

fn distinct<C: Copy + Eq + std::hash::Hash>(colors: &[C]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

pub(crate) fn colors_at<N, P>(namer: &mut N, chi: &P, seeds: Seeds<'_>, level: RefinementLevel) -> Vec<N::Color>
where
    N: Namer,
    P: PairColoring + ?Sized,
{
    Run::start_with(namer, chi, seeds, level != RefinementLevel::ZERO).into_level(namer, level).0
}

fn check_size<P: PairColoring + ?Sized>(g: &ColoredGraph, chi: &P) {
    assert_eq!(g.n(), chi.vertex_count(), "pair coloring built for a different vertex count");
}

fn seeds(g: &ColoredGraph) -> Seeds<'_> {
    Seeds { colors: g.colors(), marked: None }
}

/// Per-vertex colors `χ_r(x)` as digest codes.
///
/// # Panics
/// If `chi` is defined on a different number of vertices than `g`.
pub fn refine_levels<P: PairColoring + ?Sized>(g: &ColoredGraph, chi: &P, r: RefinementLevel) -> Vec<CanonicalCode> {
    check_size(g, chi);
    let mut namer = DigestNamer::default();
    colors_at(&mut namer, chi, seeds(g), r).iter().map(CanonicalCode::digest_code).collect()
}

/// The multiset `{{χ_r(x)}}` as a digest-based code.
pub fn level_invariant<P: PairColoring + ?Sized>(g: &ColoredGraph, chi: &P, r: RefinementLevel) -> CanonicalCode {
    check_size(g, chi);
    let mut namer = DigestNamer::default();
    let colors = colors_at(&mut namer, chi, seeds(g), r);
    namer.multiset_code(&colors)
}

/// The level invariant fully serialized, without digests. Its size grows
/// like `n^r`; intended for confirming equalities on small inputs.
pub fn level_invariant_full<P: PairColoring + ?Sized>(g: &ColoredGraph, chi: &P, r: RefinementLevel) -> CanonicalCode {
    check_size(g, chi);
    let mut namer = FullNamer::new();
    let colors = colors_at(&mut namer, chi, seeds(g), r);
    namer.multiset_code(&colors)
}

/// Exact comparison of level invariants of two graphs.
pub fn level_equivalent<P, Q>(g: &ColoredGraph, chi_g: &P, h: &ColoredGraph, chi_h: &Q, r: RefinementLevel) -> bool
where
    P: PairColoring + ?Sized,
    Q: PairColoring + ?Sized,
{
    check_size(g, chi_g);
    check_size(h, chi_h);
    if g.n() != h.n() {
        return false;
    }
    let mut namer = ExactNamer::new();
    let all = r != RefinementLevel::ZERO;
    let (mut a, ra) = Run::start_with(&mut namer, chi_g, seeds(g), all).into_level(&mut namer, r);
    let (mut b, rb) = Run::start_with(&mut namer, chi_h, seeds(h), all).into_level(&mut namer, r);
    a.sort_unstable();
    b.sort_unstable();
    ra == rb && a == b
}

/// Classical color refinement with `r` rounds, as digest codes.
pub fn cr_colors(g: &ColoredGraph, r: usize) -> Vec<CanonicalCode> {
    refine_levels(g, &AdjacencyColoring(&g.graph), RefinementLevel::Round(r as u32))
}

/// Outcome of [`rounds_to_distinguish`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Distinguish {
    At(usize),
    Never,
}

impl fmt::Display for Distinguish {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distinguish::At(r) => write!(f, "{r}"),
            Distinguish::Never => f.write_str("never"),
        }
    }
}

/// The least `r` such that `r` rounds of color refinement give different
/// color multisets on `a` and `b`.
pub fn rounds_to_distinguish(a: &ColoredGraph, b: &ColoredGraph) -> Result<Distinguish> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    let mut namer = ExactNamer::new();
    let mut ra = Run::start(&mut namer, &AdjacencyColoring(&a.graph), seeds(a));
    let mut rb = Run::start(&mut namer, &AdjacencyColoring(&b.graph), seeds(b));
    let same = |x: &[u32], y: &[u32]| {
        let (mut x, mut y) = (x.to_vec(), y.to_vec());
        x.sort_unstable();
        y.sort_unstable();
        x == y
    };
    loop {
        if !same(&ra.colors, &rb.colors) {
            return Ok(Distinguish::At(ra.round));
        }
        if ra.stable && rb.stable {
            return Ok(Distinguish::Never);
        }
        ra.step(&mut namer);
        rb.step(&mut namer);
    }
}
