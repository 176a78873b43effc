//! Exact invariants of the two-orbit Fano varieties of Picard rank one
//! (the horospherical families together with the F4 and A1 x G2 cases) and
//! the stability of their tangent bundles, computed from Dynkin data alone.
//!
//! The numeric core is generic over an exact integer type (see
//! [`Scalar`]); the aliases below fix it to `BigInt`, which is what the CLI
//! uses.

pub mod error;
pub mod flagvar;
pub mod pasquier;
pub mod rootsys;
pub mod scalar;

use num_bigint::BigInt;
use num_rational::Ratio;

pub use error::{Error, Result};
pub use flagvar::{FlagInvariants, MaximalFlags, ParabolicMarking};
pub use pasquier::{
    catalog_reports, enumerate_triples, stability_reports, stability_verdict, Family, FamilyKind, FoliationInvariants, StabilityReport, TripleSpec, VarietyInvariants,
    Verdict,
};
pub use rootsys::{DynkinType, Root, RootSystem, SimpleFactor, Weight};
pub use scalar::Scalar;

/// Arbitrary-precision rational.
pub type Rational = Ratio<BigInt>;
/// Fixed-width rational; operations report overflow instead of wrapping.
pub type Rational64 = Ratio<i64>;

pub type ExactWeight = Weight<BigInt>;
pub type Weight64 = Weight<i64>;

pub type ExactFlagInvariants = FlagInvariants<BigInt>;
pub type ExactVarietyInvariants = VarietyInvariants<BigInt>;
pub type ExactReport = StabilityReport<BigInt>;
pub type Report64 = StabilityReport<i64>;
