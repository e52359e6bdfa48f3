//! Exact character-theoretic computations for Picard groups of 2-blocks
//! with abelian defect groups: cyclotomic arithmetic, character tables and
//! block data, perfect isometries, normalizers in matrix groups over
//! `Z/2^n`, and assembly of Picard groups as character permutations.

pub mod chartab;
pub mod commands;
pub mod cyclo;
pub mod error;
pub mod groups;
pub mod isometry;
pub mod matring;
pub mod picassembly;

pub use error::{Error, Result};
