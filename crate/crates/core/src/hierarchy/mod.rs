//! The invariant registry, pairwise reports, the diagram of implications
//! between invariants, the separation suite and corpus mining.
//!
//! Verdicts are exact except for the `_float` spectral variants, which are
//! computed from the eigenprojections and serve as a cross-check. The
//! diagram check runs both paths and requires them to agree with every
//! arrow.

mod corpus;
mod diagram;
mod invariant;
mod report;
mod suite;

pub use corpus::{all_graphs, mine_corpus, Corpus, ALL_GRAPHS_CAP};
pub use diagram::{check_diagram, violations_in, DiagramEdge, EdgeKind, Violation, DIAGRAM};
pub use invariant::{invariant_code, omega_levels, verdict, verdicts, InvariantId, Path, Verdict};
pub use report::{compare_pair, SeparationCertificate};
pub use suite::{run_separation_suite, suite_passed, SuiteItem, DEFAULT_R_MAX};
