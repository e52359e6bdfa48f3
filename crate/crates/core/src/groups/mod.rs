//! Explicit finite groups and the generic group machinery used by the rest
//! of the crate.

pub mod auto;
pub mod factor;
pub mod family;
pub mod finite;
pub mod signed;
pub mod table;

pub use auto::{AutomorphismGroup, AutomorphismReport};
pub use factor::Factor;
pub use family::FamilyTag;
pub use finite::{ConjugacyData, FiniteGroup};
pub use signed::{SignedPerm, SignedPermGroup};
pub use table::{Fingerprint, TableGroup};

/// `iso_test` on two table groups.
pub fn iso_test(a: &TableGroup, b: &TableGroup) -> bool {
    a.is_isomorphic(b)
}
