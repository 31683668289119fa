use serde::{Deserialize, Serialize};

use super::eigen::{eigen_structure, EigenStructure, Tolerances};
use crate::code::{CanonicalCode, Encoder};
use crate::error::Result;
use crate::graph::{ColoredGraph, Graph};
use crate::refinement::{level_equivalent, level_invariant, PairColoring, RefinementLevel};

/// The three spectral invariants computed directly from projectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fsi {
    /// Eigenvalues and angles: spectrum with `P^(0)`.
    Ea,
    /// Spectrum with `P^(½)`.
    Weak,
    /// Spectrum with `P^(1)`.
    Strong,
}

impl Fsi {
    pub fn level(self) -> RefinementLevel {
        match self {
            Fsi::Ea => RefinementLevel::ZERO,
            Fsi::Weak => RefinementLevel::Half,
            Fsi::Strong => RefinementLevel::ONE,
        }
    }
}

/// `P_*(x, y) = (P_1(x, y), …, P_m(x, y))`, each entry on the value grid.
#[derive(Clone, Copy, Debug)]
pub struct ProjectionColoring<'a>(pub &'a EigenStructure);

impl PairColoring for ProjectionColoring<'_> {
    fn vertex_count(&self) -> usize {
        self.0.n()
    }

    fn encode_pair(&self, x: usize, y: usize, enc: &mut Encoder) {
        let tol = self.0.tolerances();
        enc.open_tuple();
        for i in 0..self.0.m() {
            enc.int(tol.quantize(self.0.projector(i, x, y)));
        }
        enc.close();
    }
}

/// `α_*(x, y) = (α_1(x, y), …, α_m(x, y))`, each entry on the value grid.
#[derive(Clone, Copy, Debug)]
pub struct AngleColoring<'a>(pub &'a EigenStructure);

impl PairColoring for AngleColoring<'_> {
    fn vertex_count(&self) -> usize {
        self.0.n()
    }

    fn encode_pair(&self, x: usize, y: usize, enc: &mut Encoder) {
        let tol = self.0.tolerances();
        enc.open_tuple();
        for i in 0..self.0.m() {
            enc.int(tol.quantize(self.0.alpha(i, x, y)));
        }
        enc.close();
    }
}

/// Grid-rounded distinct eigenvalues with multiplicities, ascending.
pub fn spectrum_code(es: &EigenStructure) -> CanonicalCode {
    let tol = es.tolerances();
    let mut enc = Encoder::new();
    enc.open_tuple();
    for g in &es.groups {
        enc.open_tuple();
        enc.int(tol.quantize(g.mu));
        enc.uint(g.multiplicity as u128);
        enc.close();
    }
    enc.close();
    enc.into_code()
}

fn uniform(g: &Graph) -> ColoredGraph {
    ColoredGraph::uniform(g.clone())
}

/// `P^(r)`: the level-`r` refinement of the projection coloring.
pub fn projection_invariant(g: &Graph, r: RefinementLevel, tol: Tolerances) -> Result<CanonicalCode> {
    let es = eigen_structure(g, tol)?;
    Ok(level_invariant(&uniform(g), &ProjectionColoring(&es), r))
}

/// `α^(r)`: the level-`r` refinement of the angle coloring.
pub fn angle_invariant(g: &Graph, r: RefinementLevel, tol: Tolerances) -> Result<CanonicalCode> {
    let es = eigen_structure(g, tol)?;
    Ok(level_invariant(&uniform(g), &AngleColoring(&es), r))
}

/// `(spectrum, P^(r))` for any level.
pub fn spectral_level_code(g: &Graph, r: RefinementLevel, tol: Tolerances) -> Result<CanonicalCode> {
    let es = eigen_structure(g, tol)?;
    let p = level_invariant(&uniform(g), &ProjectionColoring(&es), r);
    Ok(CanonicalCode::tuple([spectrum_code(&es), p]))
}

/// EA, weak or strong invariant computed from its definition.
pub fn fsi_direct(g: &Graph, which: Fsi, tol: Tolerances) -> Result<CanonicalCode> {
    spectral_level_code(g, which.level(), tol)
}

/// Exact comparison of `(spectrum, P^(r))` given float eigenstructures: the
/// grid-rounded codes are compared through a shared interning namer.
pub fn spectral_level_equal(g: &Graph, h: &Graph, r: RefinementLevel, tol: Tolerances) -> Result<bool> {
    if g.n() != h.n() {
        return Ok(false);
    }
    let (eg, eh) = (eigen_structure(g, tol)?, eigen_structure(h, tol)?);
    Ok(spectrum_code(&eg) == spectrum_code(&eh)
        && level_equivalent(&uniform(g), &ProjectionColoring(&eg), &uniform(h), &ProjectionColoring(&eh), r))
}

/// Like [`spectral_level_equal`] with the angle coloring in place of `P_*`.
pub fn angle_level_equal(g: &Graph, h: &Graph, r: RefinementLevel, tol: Tolerances) -> Result<bool> {
    if g.n() != h.n() {
        return Ok(false);
    }
    let (eg, eh) = (eigen_structure(g, tol)?, eigen_structure(h, tol)?);
    Ok(spectrum_code(&eg) == spectrum_code(&eh)
        && level_equivalent(&uniform(g), &AngleColoring(&eg), &uniform(h), &AngleColoring(&eh), r))
}
