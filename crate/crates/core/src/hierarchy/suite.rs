use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::invariant::{omega_levels, InvariantId, Verdict};
use super::report::{compare_pair, SeparationCertificate};
use crate::constructions::{gallery, GalleryEntry};
use crate::error::Result;
use crate::refinement::RefinementLevel;
use crate::walks::walk_matrix_with;

/// Default highest numbered `ω` level reported (besides `•`).
pub const DEFAULT_R_MAX: u32 = 6;

/// One separation of the suite: the claim, the gallery pair it runs on and
/// the resulting certificate.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteItem {
    pub item: &'static str,
    pub claim: &'static str,
    pub entry: &'static str,
    /// Extra evidence outside the eight listed separations.
    pub supplementary: bool,
    pub certificate: SeparationCertificate,
}

impl SuiteItem {
    pub fn passed(&self) -> bool {
        self.certificate.passed()
    }
}

struct Plan {
    item: &'static str,
    claim: &'static str,
    entry: &'static str,
    supplementary: bool,
    expected: Vec<(InvariantId, Verdict)>,
}

fn omega(r: u32) -> InvariantId {
    InvariantId::Omega(RefinementLevel::Round(r))
}

fn plans(r_max: u32) -> Vec<Plan> {
    use InvariantId::*;
    use Verdict::*;
    let plan = |item, claim, entry, expected| Plan { item, claim, entry, supplementary: false, expected };
    let mut sr: Vec<(InvariantId, Verdict)> = omega_levels(r_max).into_iter().map(|r| (Omega(r), Equal)).collect();
    sr.push((Wl32, Unequal));
    vec![
        plan("1", "wl1 does not determine spec", "c6_vs_2c3", vec![(Wl1, Equal), (Spec, Unequal)]),
        plan("2", "ea does not determine mea", "appendix_a_walkmatrices", vec![(InvariantId::EA, Equal), (Mea, Unequal)]),
        plan(
            "3",
            "genspec determines neither wm nor ea",
            "genspec7",
            vec![(Genspec, Equal), (Wm, Unequal), (InvariantId::EA, Unequal)],
        ),
        plan("4", "omega(2) does not determine wl1", "paulus_2512", vec![(omega(2), Equal), (Wl1, Unequal)]),
        plan(
            "5",
            "wl3/2 determines neither strong nor wl2",
            "rattan_seppelt",
            vec![(Wl32, Equal), (InvariantId::STRONG, Unequal), (Wl2, Unequal)],
        ),
        plan("6", "omega(*) does not determine wl3/2", "shrikhande_rook", sr),
        plan("7a", "omega(1) does not determine omega(2)", "paulus_2512_r1", vec![(omega(1), Equal), (omega(2), Unequal)]),
        plan("7b", "omega(2) does not determine omega(3)", "paulus_2512", vec![(omega(2), Equal), (omega(3), Unequal)]),
        plan("7c", "omega(3) does not determine omega(4)", "paulus_2502", vec![(omega(3), Equal), (omega(4), Unequal)]),
        plan("8", "omega(3) does not determine wl1", "paulus_2502", vec![(omega(3), Equal), (Wl1, Unequal)]),
        Plan {
            item: "s",
            claim: "omega(2) determines neither omega(3) nor wl1 (searched P25.12 coloring)",
            entry: "paulus_2512_search",
            supplementary: true,
            expected: vec![(omega(2), Equal), (omega(3), Unequal), (Wl1, Unequal)],
        },
    ]
}

/// The walk-matrix tables shipped for the tree pair must be the sorted
/// 10-column walk matrices of the trees, and their column sums must differ.
fn check_tables(e: &GalleryEntry, cert: &mut SeparationCertificate) {
    let Some((t, t2)) = &e.tables else { return };
    let sorted = |rows: &[Vec<BigUint>]| {
        let mut r = rows.to_vec();
        r.sort();
        r
    };
    for (name, table, g) in [("T", t, &e.g), ("T'", t2, &e.h)] {
        let cols = table.first().map_or(0, Vec::len);
        if sorted(table) != walk_matrix_with(g, cols).sorted_rows(cols) {
            cert.note(format!("table {name} is not the sorted walk matrix of its tree"));
        }
    }
    let totals = |rows: &[Vec<BigUint>]| -> Vec<BigUint> {
        let cols = rows.first().map_or(0, Vec::len);
        (0..cols).map(|k| rows.iter().map(|r| &r[k]).sum()).collect()
    };
    if totals(t) == totals(t2) {
        cert.note("table column sums agree, so the tables alone do not separate mea");
    }
}

/// Runs every separation on its gallery pair with the full diagram verdict
/// set, `ω` up to `r_max`. Items run in parallel; the output order is fixed.
pub fn run_separation_suite(r_max: u32) -> Result<Vec<SuiteItem>> {
    let ids = InvariantId::diagram_set(r_max);
    let plans = plans(r_max);
    plans
        .into_par_iter()
        .map(|p| {
            let e = gallery(p.entry)?;
            let mut certificate = compare_pair(&format!("{}:{}", p.item, p.entry), &e.g, &e.h, &ids);
            certificate.expect(&p.expected);
            check_tables(&e, &mut certificate);
            Ok(SuiteItem { item: p.item, claim: p.claim, entry: p.entry, supplementary: p.supplementary, certificate })
        })
        .collect()
}

/// All items, supplementary ones included, passed.
pub fn suite_passed(items: &[SuiteItem]) -> bool {
    items.iter().all(SuiteItem::passed)
}
