//! Exact computations on finite-dimensional solvable Lie algebras over the
//! rationals and prime fields.

pub mod error;
pub mod exactlin;

pub use error::{Error, Result};
pub use exactlin::{FieldSpec, Matrix, Scalar, Subspace, Vector};
pub mod liealg;

pub use liealg::{LieAlgebra, QuotientMap, Subalgebra};
pub mod series;
pub mod chief;
pub mod classify;
pub mod harness;
