//! Spectral invariants.
//!
//! Characteristic polynomials are exact. Everything built on eigenvectors
//! (projectors, angles, main angles and the direct spectral invariants) uses
//! a Jacobi eigensolver in `f64` and rounds values to a grid before they
//! enter canonical codes. Those codes are for cross-checking; the exact walk
//! invariants in [`crate::walks`] are authoritative.

mod charpoly;
mod eigen;
mod fsi;
mod identities;

pub use charpoly::{char_poly, char_poly_from_closed_walks, genspec_equivalent, spectrum_equivalent, CharPoly};
pub use eigen::{decimal12, eigen_structure, EigenGroup, EigenStructure, Tolerances, NEAR_SPLIT_FACTOR};
pub use fsi::{
    angle_invariant, angle_level_equal, fsi_direct, projection_invariant, spectral_level_code, spectral_level_equal,
    spectrum_code, AngleColoring, Fsi, ProjectionColoring,
};
pub use identities::{
    mea_values, mea_values_equal, verify_cvetkovic, verify_walk_decomposition, walk_decomposition_residual,
    MainSpectrum,
};
