//! Exact-arithmetic engine for a hierarchy of graph isomorphism invariants.
//!
//! The crate computes and compares three families of invariants:
//!
//! * combinatorial refinements: color refinement (1-WL), its individualized
//!   variant 3/2-WL, and the pair refinement 2-WL;
//! * walk-count refinements `ω^(r)` built over the pair coloring
//!   `w_*(x, y) = (w_0(x, y), ..., w_n(x, y))`;
//! * spectral invariants: spectrum, generalized spectrum, eigenvalues and
//!   angles, weak and strong spectral invariants, main eigenvalues and angles.
//!
//! Everything that decides a verdict runs on exact integers. The
//! floating-point eigendecomposition exists to cross-check the walk-count
//! characterisation of the spectral invariants.
//!
//! ```
//! use walkwl_core::graph::{disjoint_union, generate, Family};
//! use walkwl_core::refinement::wl1_equivalent;
//! use walkwl_core::spectral::spectrum_equivalent;
//!
//! let c6 = generate(Family::Cycle(6)).unwrap();
//! let c3 = generate(Family::Cycle(3)).unwrap();
//! let two_c3 = disjoint_union(&c3, &c3);
//! assert!(wl1_equivalent(&c6.clone().into(), &two_c3.clone().into()));
//! assert!(!spectrum_equivalent(&c6, &two_c3).unwrap());
//! ```

pub mod code;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod hierarchy;
pub mod refinement;
pub mod spectral;
pub mod walks;

pub use code::{CanonicalCode, Digest};
pub use error::{Error, Result};
pub use graph::{ColoredGraph, Graph};
pub use refinement::RefinementLevel;
