//! Exact walk counts and the walk-refinement invariants `ω^(r)`.
//!
//! `w_k(x, y)` is the number of walks of length `k` from `x` to `y`, the
//! `(x, y)` entry of `A^k`. Counts are kept in `u128` while they fit and
//! switch to arbitrary precision otherwise; both representations encode to
//! identical canonical codes.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::code::{CanonicalCode, Encoder};
use crate::graph::{ColoredGraph, Graph};
use crate::refinement::{level_equivalent, level_invariant, PairColoring, RefinementLevel};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Counts {
    Small(Vec<u128>),
    Big(Vec<BigUint>),
}

/// `w_k(x, y)` for `0 ≤ k ≤ maxlen`, stored as `[k][x][y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    n: usize,
    maxlen: usize,
    counts: Counts,
}

/// Column `y` of `A^0 … A^maxlen`, as `[k][x]`; `None` on `u128` overflow.
fn column_small(g: &Graph, y: usize, maxlen: usize) -> Option<Vec<u128>> {
    let n = g.n();
    let mut out = vec![0u128; (maxlen + 1) * n];
    out[y] = 1;
    for k in 0..maxlen {
        let (prev, next) = out.split_at_mut((k + 1) * n);
        let prev = &prev[k * n..];
        for x in 0..n {
            let mut s = 0u128;
            for &z in g.neighbors(x) {
                s = s.checked_add(prev[z])?;
            }
            next[x] = s;
        }
    }
    Some(out)
}

fn column_big(g: &Graph, y: usize, maxlen: usize) -> Vec<BigUint> {
    let n = g.n();
    let mut out = vec![BigUint::zero(); (maxlen + 1) * n];
    out[y] = BigUint::one();
    for k in 0..maxlen {
        let (prev, next) = out.split_at_mut((k + 1) * n);
        let prev = &prev[k * n..];
        for x in 0..n {
            let mut s = BigUint::zero();
            for &z in g.neighbors(x) {
                s += &prev[z];
            }
            next[x] = s;
        }
    }
    out
}

fn assemble<T: Clone + Default>(cols: Vec<Vec<T>>, n: usize, maxlen: usize) -> Vec<T> {
    let mut out = vec![T::default(); (maxlen + 1) * n * n];
    for (y, col) in cols.into_iter().enumerate() {
        for k in 0..=maxlen {
            for x in 0..n {
                out[(k * n + x) * n + y] = col[k * n + x].clone();
            }
        }
    }
    out
}

/// Exact walk counts up to length `maxlen`. Columns are computed in parallel.
pub fn walk_table(g: &Graph, maxlen: usize) -> WalkTable {
    let n = g.n();
    let small: Option<Vec<Vec<u128>>> = (0..n).into_par_iter().map(|y| column_small(g, y, maxlen)).collect();
    let counts = match small {
        Some(cols) => Counts::Small(assemble(cols, n, maxlen)),
        None => {
            let cols: Vec<Vec<BigUint>> = (0..n).into_par_iter().map(|y| column_big(g, y, maxlen)).collect();
            Counts::Big(assemble(cols, n, maxlen))
        }
    };
    WalkTable { n, maxlen, counts }
}

/// The table the walk invariants use: lengths `0 … n − 1`.
pub fn default_walk_table(g: &Graph) -> WalkTable {
    walk_table(g, g.n().saturating_sub(1))
}

impl WalkTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn maxlen(&self) -> usize {
        self.maxlen
    }

    /// True when every count fits in `u128`.
    pub fn is_small(&self) -> bool {
        matches!(self.counts, Counts::Small(_))
    }

    fn idx(&self, k: usize, x: usize, y: usize) -> usize {
        assert!(k <= self.maxlen && x < self.n && y < self.n, "walk table index out of range");
        (k * self.n + x) * self.n + y
    }

    pub fn get(&self, k: usize, x: usize, y: usize) -> BigUint {
        let i = self.idx(k, x, y);
        match &self.counts {
            Counts::Small(v) => BigUint::from(v[i]),
            Counts::Big(v) => v[i].clone(),
        }
    }

    fn write(&self, k: usize, x: usize, y: usize, enc: &mut Encoder) {
        let i = self.idx(k, x, y);
        match &self.counts {
            Counts::Small(v) => enc.uint(v[i]),
            Counts::Big(v) => enc.biguint(&v[i]),
        }
    }

    /// `(w_0(x, y), …, w_maxlen(x, y))`.
    pub fn sequence(&self, x: usize, y: usize) -> Vec<BigUint> {
        (0..=self.maxlen).map(|k| self.get(k, x, y)).collect()
    }

    /// `Σ_x w_k(x, x)` for every `k`.
    pub fn closed_totals(&self) -> Vec<BigUint> {
        (0..=self.maxlen).map(|k| (0..self.n).map(|x| self.get(k, x, x)).sum()).collect()
    }

    /// Checks `w_{k+1}(x, y) = Σ_{z ∈ N(x)} w_k(z, y)`, the base case and symmetry.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = self.n;
        if g.n() != n {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                if self.get(0, x, y) != BigUint::from((x == y) as u8) {
                    return false;
                }
                for k in 0..=self.maxlen {
                    if self.get(k, x, y) != self.get(k, y, x) {
                        return false;
                    }
                    if k < self.maxlen {
                        let s: BigUint = g.neighbors(x).iter().map(|&z| self.get(k, z, y)).sum();
                        if s != self.get(k + 1, x, y) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The pair coloring `w_*(x, y) = (w_0(x, y), …, w_maxlen(x, y))`.
pub struct WalkColoring<'a>(pub &'a WalkTable);

impl PairColoring for WalkColoring<'_> {
    fn vertex_count(&self) -> usize {
        self.0.n
    }

    fn encode_pair(&self, x: usize, y: usize, enc: &mut Encoder) {
        enc.open_tuple();
        for k in 0..=self.0.maxlen {
            self.0.write(k, x, y, enc);
        }
        enc.close();
    }
}

/// Rows `W(x, ·) = (W(x, 0), …, W(x, n − 1))` with `W(x, k) = Σ_y w_k(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkMatrix {
    rows: Vec<Vec<BigUint>>,
}

impl WalkMatrix {
    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Rows truncated to `cols` columns and sorted lexicographically (as numbers).
    pub fn sorted_rows(&self, cols: usize) -> Vec<Vec<BigUint>> {
        let mut rows: Vec<Vec<BigUint>> = self.rows.iter().map(|r| r.iter().take(cols).cloned().collect()).collect();
        rows.sort();
        rows
    }

    /// Whitespace-separated grid of [`WalkMatrix::sorted_rows`], one row per line.
    pub fn to_grid(&self, cols: usize) -> String {
        let mut out = String::new();
        for row in self.sorted_rows(cols) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// The WM invariant: the multiset of rows.
    pub fn row_multiset_code(&self) -> CanonicalCode {
        CanonicalCode::multiset(self.rows.iter().map(|r| CanonicalCode::tuple(r.iter().map(CanonicalCode::biguint))))
    }
}

/// Walk matrix with `columns` columns (`n` by default in [`walk_matrix`]).
pub fn walk_matrix_with(g: &Graph, columns: usize) -> WalkMatrix {
    let n = g.n();
    let mut rows = vec![Vec::with_capacity(columns); n];
    let mut cur = vec![BigUint::one(); n];
    for _ in 0..columns {
        for x in 0..n {
            rows[x].push(cur[x].clone());
        }
        cur = (0..n).map(|x| g.neighbors(x).iter().map(|&z| &cur[z]).sum()).collect();
    }
    WalkMatrix { rows }
}

pub fn walk_matrix(g: &Graph) -> WalkMatrix {
    walk_matrix_with(g, g.n())
}

/// `c_k = Σ_x w_k(x, x)` for `0 ≤ k ≤ n`.
pub fn closed_walks(g: &Graph) -> Vec<BigUint> {
    walk_table(g, g.n()).closed_totals()
}

/// `w_k(G) = Σ_{x,y} w_k(x, y)` for `0 ≤ k ≤ maxlen`.
pub fn total_walks(g: &Graph, maxlen: usize) -> Vec<BigUint> {
    let n = g.n();
    let mut out = Vec::with_capacity(maxlen + 1);
    let mut cur = vec![BigUint::one(); n];
    for k in 0..=maxlen {
        out.push(cur.iter().sum());
        if k < maxlen {
            cur = (0..n).map(|x| g.neighbors(x).iter().map(|&z| &cur[z]).sum()).collect();
        }
    }
    out
}

/// The table behind `w_*`: lengths `0 … n`.
///
/// Length `n` is needed at level 0. Without it `K₂` and `2K₁` have equal
/// diagonal sequences `(1, 0)` although their spectra differ; with it the
/// diagonal sequences sum to `c_0 … c_n`, which fix the spectrum. At levels
/// `½` and above the extra length changes no verdict.
pub fn omega_walk_table(g: &Graph) -> WalkTable {
    walk_table(g, g.n())
}

/// `ω^(r)(G)`: the level-`r` invariant of the pair coloring `w_*`.
pub fn omega_invariant(g: &Graph, r: RefinementLevel) -> CanonicalCode {
    let t = omega_walk_table(g);
    level_invariant(&ColoredGraph::uniform(g.clone()), &WalkColoring(&t), r)
}

/// Exact `ω^(r)` verdicts for several levels, sharing the walk tables.
pub fn omega_verdicts(g: &Graph, h: &Graph, levels: &[RefinementLevel]) -> Vec<bool> {
    if g.n() != h.n() {
        return vec![false; levels.len()];
    }
    let (tg, th) = rayon::join(|| omega_walk_table(g), || omega_walk_table(h));
    let (cg, ch) = (ColoredGraph::uniform(g.clone()), ColoredGraph::uniform(h.clone()));
    levels.iter().map(|&r| level_equivalent(&cg, &WalkColoring(&tg), &ch, &WalkColoring(&th), r)).collect()
}

pub fn omega_equal(g: &Graph, h: &Graph, r: RefinementLevel) -> bool {
    omega_verdicts(g, h, &[r])[0]
}

/// Same eigenvalues and angles, decided as `ω^(0)`.
pub fn ea_equivalent(g: &Graph, h: &Graph) -> bool {
    omega_equal(g, h, RefinementLevel::ZERO)
}

/// Fürer's weak spectral invariant, decided as `ω^(1/2)`.
pub fn weak_equivalent(g: &Graph, h: &Graph) -> bool {
    omega_equal(g, h, RefinementLevel::Half)
}

/// Fürer's strong spectral invariant, decided as `ω^(1)`.
pub fn strong_equivalent(g: &Graph, h: &Graph) -> bool {
    omega_equal(g, h, RefinementLevel::ONE)
}

/// Same main eigenvalues and main angles: `w_k(G) = w_k(H)` for `1 ≤ k ≤ n − 1`.
pub fn mea_equivalent(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && total_walks(g, g.n().saturating_sub(1)) == total_walks(h, h.n().saturating_sub(1))
}

/// Equal multisets of walk-matrix rows.
pub fn wm_equivalent(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() {
        return false;
    }
    let (a, b) = (walk_matrix(g), walk_matrix(h));
    a.sorted_rows(g.n()) == b.sorted_rows(h.n())
}
