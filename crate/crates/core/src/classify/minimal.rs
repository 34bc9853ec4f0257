use serde::Serialize;

use crate::chief::minimal_ideals;
use crate::error::{Error, Result};
use crate::exactlin::{enumerate_subspaces, FieldSpec, Subspace};
use crate::liealg::LieAlgebra;
use crate::series::{all_subalgebras, frattini, maximal_subalgebras, nilpotent_length};

/// Nilpotent length of the subalgebra `S`.
pub fn subalgebra_length(l: &LieAlgebra, s: &Subspace) -> Result<usize> {
    nilpotent_length(l.subalgebra(s)?.induced())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalNonN {
    pub flag: bool,
    pub n: usize,
    /// Nilpotent length of each maximal subalgebra, in `maximal_spaces` order.
    pub max_lengths: Vec<usize>,
    /// A maximal subalgebra as long as `L`, when the flag is false.
    pub witness: Option<Subspace>,
}

/// Every maximal subalgebra has smaller nilpotent length than `L`.
pub fn is_minimal_non_n(l: &LieAlgebra) -> Result<MinimalNonN> {
    let n = nilpotent_length(l)?;
    let ms = maximal_subalgebras(l)?;
    let mut max_lengths = Vec::with_capacity(ms.maximals.len());
    let mut witness = None;
    for m in &ms.maximals {
        let k = nilpotent_length(m.induced())?;
        if k >= n && witness.is_none() {
            witness = Some(m.space().clone());
        }
        max_lengths.push(k);
    }
    Ok(MinimalNonN {
        flag: l.dim() > 0 && witness.is_none(),
        n,
        max_lengths,
        witness,
    })
}

/// Whether every nilpotent subalgebra is abelian; the witness is a nilpotent
/// nonabelian one.
pub fn is_a_algebra(l: &LieAlgebra) -> Result<(bool, Option<Subspace>)> {
    for s in all_subalgebras(l)? {
        if s.dim() >= 3 && l.is_nilpotent_subalgebra(&s) && !l.product(&s, &s).is_zero() {
            return Ok((false, Some(s)));
        }
    }
    Ok((true, None))
}

/// `L²` is nilpotent.
pub fn is_nilpotent_by_abelian(l: &LieAlgebra) -> bool {
    let l2 = l.product(&l.full(), &l.full());
    l.is_nilpotent_subalgebra(&l2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    /// Absent over `Q`, where chief series are not computed.
    pub supersolvable: Option<bool>,
    pub nilpotent_by_abelian: bool,
    pub solvability_index: usize,
}

pub fn structure_flags(l: &LieAlgebra) -> Result<StructureFlags> {
    let supersolvable = if l.field().is_prime_field() {
        let cs = crate::chief::chief_series(l, None)?;
        Some(cs.factor_dims().iter().all(|&d| d == 1))
    } else {
        None
    };
    Ok(StructureFlags {
        supersolvable,
        nilpotent_by_abelian: is_nilpotent_by_abelian(l),
        solvability_index: l.derived_length(),
    })
}

/// No subspace strictly between `0` and `A` is invariant under `ad L`
/// modulo `ctx`. `A` is assumed to meet `ctx` trivially.
pub fn module_irreducible(l: &LieAlgebra, ctx: &Subspace, a: &Subspace) -> Result<bool> {
    if !l.field().is_prime_field() {
        return Err(Error::UnsupportedOverRationals("module_irreducible"));
    }
    let full = l.full();
    let invariant = |w: &Subspace| l.product(&full, w).is_subspace_of(&w.join(ctx));
    if !invariant(a) {
        return Err(Error::PreconditionUnmet("A is not invariant modulo the context ideal".into()));
    }
    for d in 1..a.dim() {
        for s in enumerate_subspaces(a.dim(), l.field(), Some(d))? {
            if invariant(&a.lift(&s)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NaNType {
    NotMinimalNaN,
    TypeI,
    TypeII,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaNClassification {
    pub kind: NaNType,
    /// Dimension of the unique minimal ideal of `L/φ(L)` on positives.
    pub dim_a: Option<usize>,
    /// `L` itself when `L²` is nilpotent, otherwise a maximal `M` with `M²`
    /// not nilpotent.
    pub witness: Option<Subspace>,
}

/// Minimal non-(nilpotent-by-abelian) test, then the shape of `L/φ(L)`:
/// `A ∔ B` with `A` the unique minimal ideal, and `B` either a minimal
/// abelian ideal plus a line (type I) or the Heisenberg algebra (type II).
pub fn classify_nan(l: &LieAlgebra) -> Result<NaNClassification> {
    let negative = |w: Subspace| NaNClassification {
        kind: NaNType::NotMinimalNaN,
        dim_a: None,
        witness: Some(w),
    };
    if is_nilpotent_by_abelian(l) {
        return Ok(negative(l.full()));
    }
    let ms = maximal_subalgebras(l)?;
    for m in &ms.maximals {
        if !is_nilpotent_by_abelian(m.induced()) {
            return Ok(negative(m.space().clone()));
        }
    }
    let q = l.quotient(&frattini(l)?)?;
    let lbar = q.quotient();
    let mins = minimal_ideals(lbar)?;
    let violation = |why: &str| Err(Error::TheoremViolation(format!("minimal naN shape: {why}")));
    if mins.len() != 1 {
        return violation("minimal ideal of L/φ(L) is not unique");
    }
    let a = &mins[0];
    if a.dim() < 2 || !lbar.product(a, a).is_zero() {
        return violation("minimal ideal is not abelian of dimension at least 2");
    }
    let Some(b) = subalgebra_complement(lbar, a)? else {
        return violation("minimal ideal has no complement");
    };
    let bsub = lbar.subalgebra(&b)?;
    let bl = bsub.induced();
    let kind = if is_heisenberg(bl) {
        NaNType::TypeII
    } else if has_abelian_minimal_hyperplane(bl)? {
        NaNType::TypeI
    } else {
        return violation("complement is neither type I nor type II");
    };
    if let FieldSpec::Prime(p) = l.field() {
        if p >= 3 && a.dim() % p as usize != 0 {
            return violation("p does not divide dim A");
        }
    }
    Ok(NaNClassification {
        kind,
        dim_a: Some(a.dim()),
        witness: None,
    })
}

/// Lexicographically first subalgebra `S` with `S ∩ A = 0`, `S + A = L`.
pub fn subalgebra_complement(l: &LieAlgebra, a: &Subspace) -> Result<Option<Subspace>> {
    let d = l.dim() - a.dim();
    for s in enumerate_subspaces(l.dim(), l.field(), Some(d))? {
        if s.meet(a).is_zero() && l.is_subalgebra(&s) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn is_heisenberg(b: &LieAlgebra) -> bool {
    b.dim() == 3 && b.nilpotency_class() == Some(2)
}

fn has_abelian_minimal_hyperplane(b: &LieAlgebra) -> Result<bool> {
    Ok(minimal_ideals(b)?
        .iter()
        .any(|m| m.dim() + 1 == b.dim() && b.product(m, m).is_zero()))
}
