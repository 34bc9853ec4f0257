//! Exact linear algebra over `Q` and `F_p`, and subspace enumeration.

mod enumerate;
mod field;
mod matrix;
mod subspace;

pub use enumerate::{
    all_vectors, budget, enumerate_subspaces, enumerate_subspaces_with, gaussian_binomial, set_budget,
    subspace_count, Budget, SubspaceStream,
};
pub use field::{FieldSpec, Scalar};
pub use matrix::{
    add_vectors, axpy, is_zero_vector, rref_kernel, scale, sub_vectors, unit_vector, zero_vector, Matrix,
    RrefKernel, Vector,
};
pub use subspace::{SpanBuilder, Subspace};
