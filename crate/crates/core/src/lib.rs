//! Exact computation engine for power-map equations on small finite groups.
//!
//! The crate builds finite groups as explicit multiplication tables
//! ([`group::GroupTable`]), studies the power map `x ↦ x^n` and the subset
//! equation `{ s^n | s ∈ S } = L` ([`power`]), turns a family of published
//! divisibility identities into machine-checkable verdicts ([`theorems`]),
//! and sweeps a named catalog of constructible groups for counterexamples to
//! two open divisibility questions ([`explorer`]).
//!
//! All counts are exact big integers ([`count::BigCount`]); divisibility is
//! always decided by exact division, never by factored-form shortcuts.

pub mod count;
pub mod error;
pub mod explorer;
pub mod group;
pub mod power;
pub mod theorems;

pub use count::BigCount;
pub use error::{Error, Result};
pub use group::{ElementId, GroupTable, SubgroupInfo, SubsetMask};
