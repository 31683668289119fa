use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::code::CanonicalCode;
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, complement, ColoredGraph, Graph};
use crate::refinement::{wl1, wl1_equivalent, wl2, wl2_equivalent, wl32, wl32_equivalent, RefinementLevel};
use crate::spectral::{spectral_level_code, spectral_level_equal, Tolerances};
use crate::walks::{closed_walks, omega_invariant, omega_verdicts, total_walks, walk_matrix, wm_equivalent};

/// How a spectral invariant is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Path {
    /// Through the walk refinement `ω^(r)`, on integers.
    Exact,
    /// From the floating-point eigenprojections.
    Float,
}

/// A graph invariant the hierarchy knows how to compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvariantId {
    Spec,
    Genspec,
    Mea,
    Wm,
    Ea(Path),
    Weak(Path),
    Strong(Path),
    Omega(RefinementLevel),
    Wl1,
    Wl32,
    Wl2,
    /// Isomorphism itself, the finest invariant.
    Iso,
}

impl InvariantId {
    pub const EA: InvariantId = InvariantId::Ea(Path::Exact);
    pub const WEAK: InvariantId = InvariantId::Weak(Path::Exact);
    pub const STRONG: InvariantId = InvariantId::Strong(Path::Exact);

    /// Refinement level behind a spectral invariant.
    pub fn spectral_level(self) -> Option<RefinementLevel> {
        match self {
            InvariantId::Ea(_) => Some(RefinementLevel::ZERO),
            InvariantId::Weak(_) => Some(RefinementLevel::Half),
            InvariantId::Strong(_) => Some(RefinementLevel::ONE),
            _ => None,
        }
    }

    /// Every invariant that appears in the diagram, with `ω^(r)` for
    /// `r = 0, ½, 1, …, r_max, •` and both paths of the spectral invariants.
    pub fn diagram_set(r_max: u32) -> Vec<InvariantId> {
        let mut out = vec![InvariantId::Spec, InvariantId::Genspec, InvariantId::Mea, InvariantId::Wm];
        for p in [Path::Exact, Path::Float] {
            out.extend([InvariantId::Ea(p), InvariantId::Weak(p), InvariantId::Strong(p)]);
        }
        out.extend(omega_levels(r_max).into_iter().map(InvariantId::Omega));
        out.extend([InvariantId::Wl1, InvariantId::Wl32, InvariantId::Wl2]);
        out
    }
}

/// `0, ½, 1, …, r_max, •`.
pub fn omega_levels(r_max: u32) -> Vec<RefinementLevel> {
    let mut v = vec![RefinementLevel::ZERO, RefinementLevel::Half];
    v.extend((1..=r_max).map(RefinementLevel::Round));
    v.push(RefinementLevel::Stable);
    v
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let float = |p: &Path| if *p == Path::Float { "_float" } else { "" };
        match self {
            InvariantId::Spec => f.write_str("spec"),
            InvariantId::Genspec => f.write_str("genspec"),
            InvariantId::Mea => f.write_str("mea"),
            InvariantId::Wm => f.write_str("wm"),
            InvariantId::Ea(p) => write!(f, "ea{}", float(p)),
            InvariantId::Weak(p) => write!(f, "weak{}", float(p)),
            InvariantId::Strong(p) => write!(f, "strong{}", float(p)),
            InvariantId::Omega(RefinementLevel::Stable) => f.write_str("omega(*)"),
            InvariantId::Omega(r) => write!(f, "omega({r})"),
            InvariantId::Wl1 => f.write_str("wl1"),
            InvariantId::Wl32 => f.write_str("wl32"),
            InvariantId::Wl2 => f.write_str("wl2"),
            InvariantId::Iso => f.write_str("iso"),
        }
    }
}

impl FromStr for InvariantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let (base, path) = match t.strip_suffix("_float").or_else(|| t.strip_suffix(":float")) {
            Some(b) => (b, Path::Float),
            None => (t.strip_suffix(":exact").unwrap_or(&t), Path::Exact),
        };
        let id = match base {
            "spec" => InvariantId::Spec,
            "genspec" => InvariantId::Genspec,
            "mea" => InvariantId::Mea,
            "wm" => InvariantId::Wm,
            "ea" => InvariantId::Ea(path),
            "weak" => InvariantId::Weak(path),
            "strong" => InvariantId::Strong(path),
            "wl1" | "cr" => InvariantId::Wl1,
            "wl32" | "wl3/2" => InvariantId::Wl32,
            "wl2" => InvariantId::Wl2,
            "iso" | "isomorphism" => InvariantId::Iso,
            other => {
                let level = other
                    .strip_prefix("omega")
                    .map(|l| l.trim_start_matches('(').trim_end_matches(')'))
                    .ok_or_else(|| Error::UnknownName(format!("invariant {s:?}")))?;
                InvariantId::Omega(level.parse()?)
            }
        };
        let dual = matches!(id, InvariantId::Ea(_) | InvariantId::Weak(_) | InvariantId::Strong(_));
        if path == Path::Float && !dual {
            return Err(Error::UnknownName(format!("invariant {s:?} has no float path")));
        }
        Ok(id)
    }
}

impl Serialize for InvariantId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for InvariantId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Unequal,
    /// Not computed: a size cap was exceeded or the float path failed.
    Skipped,
}

impl Verdict {
    fn of(equal: bool) -> Verdict {
        if equal {
            Verdict::Equal
        } else {
            Verdict::Unequal
        }
    }

    fn from_result(r: Result<bool>) -> Verdict {
        r.map(Verdict::of).unwrap_or(Verdict::Skipped)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::Unequal => "unequal",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Verdicts for every requested invariant. All `ω`-based ones (the exact
/// spectral invariants included) share one pair of walk tables.
pub fn verdicts(g: &Graph, h: &Graph, ids: &[InvariantId]) -> BTreeMap<InvariantId, Verdict> {
    let mut out = BTreeMap::new();
    if g.n() != h.n() {
        // Every invariant here determines the vertex count.
        out.extend(ids.iter().map(|&id| (id, Verdict::Unequal)));
        return out;
    }
    let exact_level = |id: InvariantId| match id {
        InvariantId::Omega(r) => Some(r),
        InvariantId::Ea(Path::Exact) | InvariantId::Weak(Path::Exact) | InvariantId::Strong(Path::Exact) => {
            id.spectral_level()
        }
        _ => None,
    };
    let mut levels: Vec<RefinementLevel> = ids.iter().filter_map(|&id| exact_level(id)).collect();
    levels.sort();
    levels.dedup();
    let omega: BTreeMap<RefinementLevel, bool> =
        levels.iter().copied().zip(omega_verdicts(g, h, &levels)).collect();
    let (cg, ch) = (ColoredGraph::uniform(g.clone()), ColoredGraph::uniform(h.clone()));
    for &id in ids {
        if out.contains_key(&id) {
            continue;
        }
        let v = match exact_level(id) {
            Some(r) => Verdict::of(omega[&r]),
            None => match id {
                InvariantId::Spec => Verdict::of(closed_walks(g) == closed_walks(h)),
                InvariantId::Genspec => Verdict::of(
                    closed_walks(g) == closed_walks(h) && closed_walks(&complement(g)) == closed_walks(&complement(h)),
                ),
                InvariantId::Mea => Verdict::of(total_walks(g, g.n().saturating_sub(1)) == total_walks(h, h.n().saturating_sub(1))),
                InvariantId::Wm => Verdict::of(wm_equivalent(g, h)),
                InvariantId::Ea(_) | InvariantId::Weak(_) | InvariantId::Strong(_) => {
                    let r = id.spectral_level().expect("spectral invariant");
                    Verdict::from_result(spectral_level_equal(g, h, r, Tolerances::default()))
                }
                InvariantId::Wl1 => Verdict::of(wl1_equivalent(&cg, &ch)),
                InvariantId::Wl32 => Verdict::of(wl32_equivalent(&cg, &ch)),
                InvariantId::Wl2 => Verdict::from_result(wl2_equivalent(&cg, &ch)),
                InvariantId::Iso => Verdict::from_result(are_isomorphic(g, h)),
                InvariantId::Omega(_) => unreachable!("handled through the walk tables"),
            },
        };
        out.insert(id, v);
    }
    out
}

pub fn verdict(id: InvariantId, g: &Graph, h: &Graph) -> Verdict {
    verdicts(g, h, &[id])[&id]
}

/// A per-graph code for `id`: equal graphs get equal codes. Refinement
/// codes use digests, so equal codes are confirmed with [`verdict`] before
/// they count; float codes are rounded to the value grid and may split a
/// class whose values straddle a grid boundary.
pub fn invariant_code(id: InvariantId, g: &Graph) -> Result<CanonicalCode> {
    let seq = |v: Vec<num_bigint::BigUint>| CanonicalCode::tuple(v.iter().map(CanonicalCode::biguint));
    let n = CanonicalCode::uint(g.n() as u128);
    Ok(match id {
        InvariantId::Spec => CanonicalCode::tuple([n, seq(closed_walks(g))]),
        InvariantId::Genspec => CanonicalCode::tuple([n, seq(closed_walks(g)), seq(closed_walks(&complement(g)))]),
        InvariantId::Mea => CanonicalCode::tuple([n, seq(total_walks(g, g.n().saturating_sub(1)))]),
        InvariantId::Wm => CanonicalCode::tuple([n, walk_matrix(g).row_multiset_code()]),
        InvariantId::Ea(Path::Float) | InvariantId::Weak(Path::Float) | InvariantId::Strong(Path::Float) => {
            spectral_level_code(g, id.spectral_level().expect("spectral invariant"), Tolerances::default())?
        }
        InvariantId::Ea(_) | InvariantId::Weak(_) | InvariantId::Strong(_) => {
            omega_invariant(g, id.spectral_level().expect("spectral invariant"))
        }
        InvariantId::Omega(r) => omega_invariant(g, r),
        InvariantId::Wl1 => wl1(&g.clone().into()),
        InvariantId::Wl32 => wl32(&g.clone().into()),
        InvariantId::Wl2 => wl2(&g.clone().into())?,
        InvariantId::Iso => return Err(Error::Unsupported("no canonical form is computed for isomorphism".into())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, generate, Family};

    #[test]
    fn names_round_trip() {
        for id in InvariantId::diagram_set(6).into_iter().chain([InvariantId::Iso]) {
            assert_eq!(id.to_string().parse::<InvariantId>().unwrap(), id, "{id}");
        }
        assert_eq!("omega*".parse::<InvariantId>().unwrap(), InvariantId::Omega(RefinementLevel::Stable));
        assert_eq!("OMEGA(1/2)".parse::<InvariantId>().unwrap(), InvariantId::Omega(RefinementLevel::Half));
        assert_eq!("strong:float".parse::<InvariantId>().unwrap(), InvariantId::Strong(Path::Float));
        assert!("wl1_float".parse::<InvariantId>().is_err());
        assert!("omega(x)".parse::<InvariantId>().is_err());
        assert!("nope".parse::<InvariantId>().is_err());
    }

    #[test]
    fn hexagon_against_triangles() {
        let c3 = generate(Family::Cycle(3)).unwrap();
        let (g, h) = (generate(Family::Cycle(6)).unwrap(), disjoint_union(&c3, &c3));
        let v = verdicts(&g, &h, &InvariantId::diagram_set(2));
        assert_eq!(v[&InvariantId::Wl1], Verdict::Equal);
        assert_eq!(v[&InvariantId::Spec], Verdict::Unequal);
        assert_eq!(v[&InvariantId::Wl32], Verdict::Unequal);
        assert_eq!(v[&InvariantId::Ea(Path::Float)], Verdict::Unequal);
        assert_eq!(verdict(InvariantId::Iso, &g, &h), Verdict::Unequal);
    }

    #[test]
    fn different_orders_are_unequal_everywhere() {
        let (g, h) = (generate(Family::Cycle(5)).unwrap(), generate(Family::Cycle(6)).unwrap());
        assert!(verdicts(&g, &h, &InvariantId::diagram_set(3)).values().all(|&v| v == Verdict::Unequal));
    }

    #[test]
    fn codes_agree_with_verdicts() {
        let c3 = generate(Family::Cycle(3)).unwrap();
        let (g, h) = (generate(Family::Cycle(6)).unwrap(), disjoint_union(&c3, &c3));
        for id in InvariantId::diagram_set(2) {
            let same = invariant_code(id, &g).unwrap() == invariant_code(id, &h).unwrap();
            assert_eq!(Verdict::of(same), verdict(id, &g, &h), "{id}");
        }
        assert!(matches!(invariant_code(InvariantId::Iso, &g), Err(Error::Unsupported(_))));
    }
}
