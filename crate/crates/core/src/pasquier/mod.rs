//! The catalog of two-orbit Fano varieties of Picard rank one, their
//! invariants, their canonical foliations, and the stability verdict for
//! the tangent bundle.

pub mod blowup;
mod invariants;
mod stability;
mod triple;

pub use invariants::{
    ambient_dimension, blowup_model, foliation_from_variety, foliation_invariants,
    variety_invariants, FoliationInvariants, TypeData, VarietyInvariants, PAS_A1G2_INDEX,
    PAS_F4_INDEX,
};
pub use stability::{catalog_reports, stability_reports, stability_verdict, StabilityReport, Verdict};
pub use triple::{enumerate_triples, Family, FamilyKind, TripleSpec};
