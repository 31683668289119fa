//! Gadget graphs built from strongly regular graphs with colored ports, and
//! a gallery of the named graphs and pairs used by the separation suite.

pub mod fixtures;
mod gadget;
mod gallery;

pub use gadget::{build_gadget, check_lemma_main_assumptions, GadgetLayout, GadgetPair, LemmaMainReport, PortedGraph};
pub use gallery::{
    complements, gallery, gallery_all, paulus_2502, paulus_2512, paulus_ported, rattan_seppelt, shrikhande_rook_ports,
    GalleryEntry, RattanSeppelt, GALLERY,
};
