//! Lie algebras given by structure constants.

mod algebra;
mod catalog;
mod construct;
mod derivation;
pub mod format;
mod ops;
mod quotient;
mod random;

pub use algebra::{validate, LieAlgebra, StructureConstants};
pub use catalog::{catalog, default_field, exp2_derivation, CATALOG_NAMES};
pub use construct::{change_basis, direct_sum, semidirect, split_extension};
pub use derivation::{is_derivation, Derivation};
pub use ops::{IdealTests, Subalgebra};
pub use quotient::QuotientMap;
pub use random::random_solvable;
