use thiserror::Error;

use crate::exactlin::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime")]
    NonPrimeModulus(u64),

    #[error("field mismatch: expected {expected}, found an entry from {found}")]
    FieldMismatch { expected: FieldSpec, found: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient mismatch: subspaces live in different spaces")]
    AmbientMismatch,

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("cannot parse scalar {text:?}: {reason}")]
    ScalarParse { text: String, reason: String },

    #[error("subspace enumeration is only available over prime fields")]
    UnsupportedEnumeration,

    #[error("enumeration budget exceeded: {count} subspaces requested, bound is {bound}")]
    BudgetExceeded { count: u128, bound: u128 },

    #[error("dimension {dim} over {field} exceeds the configured limit of {limit}")]
    DimensionBudget { field: FieldSpec, dim: usize, limit: usize },

    #[error("operation `{0}` is not supported over the rationals")]
    UnsupportedOverRationals(&'static str),

    #[error("antisymmetry violated: [e{i},e{j}] and [e{j},e{i}] disagree in coordinate {k}")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },

    #[error("alternating law violated: [e{i},e{i}] has nonzero coordinate {k}")]
    AlternatingViolation { i: usize, k: usize },

    #[error("Jacobi identity violated on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("algebra is not solvable: derived series stabilises at dimension {stable_dim}")]
    NotSolvable { stable_dim: usize },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("{0} is not contained in the enclosing subspace")]
    NotContained(&'static str),

    #[error("matrices do not form a representation: pair ({a}, {b}) fails")]
    NotARepresentation { a: usize, b: usize },

    #[error("matrix is not a derivation")]
    NotADerivation,

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("unknown specimen predicate {0:?}")]
    UnknownPredicate(String),

    #[error("random generation gave up after {0} attempts")]
    RetryLimit(usize),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("construction failed: {0}")]
    ConstructionFailure(String),

    #[error("format error: {0}")]
    Format(String),
}
