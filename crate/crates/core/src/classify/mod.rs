//! Extreme, minimal non-𝒩 and A-algebra predicates, and the decomposition
//! along the upper nilpotent series.

mod astructure;
mod decompose;
mod extreme;
mod minimal;

use serde::Serialize;

pub use astructure::{a_structure, check_a_minimal_structure, AStructure};
pub use decompose::{check_extreme_decomposition, decompose, Decomposition};
pub use extreme::{
    complemented_minimal_count, extreme_by_definition, extreme_crosscheck, is_extreme, quotients_one_complemented,
    ExtremeCrosscheck,
};
pub use minimal::{
    classify_nan, is_a_algebra, is_minimal_non_n, is_nilpotent_by_abelian, module_irreducible, structure_flags,
    subalgebra_complement, subalgebra_length, MinimalNonN, NaNClassification, NaNType, StructureFlags,
};

use crate::chief::primitivity;
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::liealg::LieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    /// Extreme by definition.
    pub extreme: bool,
    /// Whether the four extreme conditions agree.
    pub extreme_agree: bool,
    pub extreme_crosscheck: ExtremeCrosscheck,
    pub minimal_non_n: MinimalNonN,
    pub a_algebra: bool,
    /// Nilpotent nonabelian subalgebra when not an A-algebra.
    pub a_witness: Option<Subspace>,
    pub supersolvable: bool,
    pub nilpotent_by_abelian: bool,
    pub solvability_index: usize,
    pub nan: NaNClassification,
    pub primitive: bool,
    pub core_free_maximal: Option<Subspace>,
}

/// All predicates at once; prime fields only.
pub fn classify(l: &LieAlgebra) -> Result<ClassificationReport> {
    if !l.field().is_prime_field() {
        return Err(Error::UnsupportedOverRationals("classify"));
    }
    let extreme_crosscheck = extreme_crosscheck(l)?;
    let (a_algebra, a_witness) = is_a_algebra(l)?;
    let flags = structure_flags(l)?;
    let prim = primitivity(l)?;
    Ok(ClassificationReport {
        extreme: extreme_crosscheck.by_definition,
        extreme_agree: extreme_crosscheck.agree(),
        extreme_crosscheck,
        minimal_non_n: is_minimal_non_n(l)?,
        a_algebra,
        a_witness,
        supersolvable: flags.supersolvable.unwrap_or(false),
        nilpotent_by_abelian: flags.nilpotent_by_abelian,
        solvability_index: flags.solvability_index,
        nan: classify_nan(l)?,
        primitive: prim.is_primitive,
        core_free_maximal: prim.core_free_maximal,
    })
}
