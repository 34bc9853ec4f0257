use serde::Serialize;

use super::minimal::{is_a_algebra, is_minimal_non_n, module_irreducible, subalgebra_complement};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::liealg::LieAlgebra;
use crate::series::{upper_nilpotent_series, upper_term};

/// Splitting `L = A_n ∔ … ∔ A_1 ∔ A_0` along the derived series, with the
/// five structure conditions evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AStructure {
    /// `A_0, A_1, …, A_n`; empty when some complement is missing.
    pub parts: Vec<Subspace>,
    /// Conditions (i) to (v) in order.
    pub conditions: [bool; 5],
}

impl AStructure {
    pub fn holds(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }

    /// The spanning element of `A_0`.
    pub fn x(&self) -> Option<Vec<crate::exactlin::Scalar>> {
        self.parts.first().filter(|a| a.dim() == 1).map(|a| a.row(0).to_vec())
    }
}

/// `A_n = L^(n)`, `B_n` the first subalgebra complement of `A_n`, then
/// `A_{i} = B_{i+1}^(i)` and `B_i` its complement in `B_{i+1}`, down to
/// `A_0 = B_1`.
pub fn a_structure(l: &LieAlgebra) -> Result<AStructure> {
    let derived = l.derived_series();
    // derived = [L^(0), …, L^(n), 0]
    let n = derived.len().saturating_sub(2);
    let none = AStructure {
        parts: Vec::new(),
        conditions: [false; 5],
    };
    if l.dim() == 0 {
        return Ok(none);
    }
    let mut parts = vec![l.zero(); n + 1];
    let mut b = l.full();
    for i in (1..=n).rev() {
        let sub = l.subalgebra(&b)?;
        let inner = sub.induced();
        let inner_derived = inner.derived_series();
        let Some(ai) = inner_derived.get(i).filter(|s| !s.is_zero()) else {
            return Ok(none);
        };
        let Some(bi) = subalgebra_complement(inner, ai)? else {
            return Ok(none);
        };
        parts[i] = b.lift(ai);
        b = b.lift(&bi);
    }
    parts[0] = b;

    let sum_from = |i: usize| parts[i..].iter().fold(l.zero(), |acc, a| acc.join(a));
    let dims: usize = parts.iter().map(|a| a.dim()).sum();
    let c1 = dims == l.dim()
        && sum_from(0).is_full()
        && parts[0].dim() == 1
        && parts.iter().all(|a| l.product(a, a).is_zero());
    let c2 = (1..=n).all(|i| sum_from(i) == derived[i]);
    let mut c3 = true;
    for i in 0..=n {
        for j in i + 1..=n {
            c3 &= l.product(&parts[i], &parts[j]).is_subspace_of(&parts[j]);
        }
    }
    let mut c4 = c2;
    if c2 {
        for i in 0..=n {
            c4 &= module_irreducible(l, &derived[i + 1], &parts[i])?;
        }
    }
    let upper = upper_nilpotent_series(l)?;
    let c5 = (0..=n).all(|i| *upper_term(&upper, n - i + 1) == derived[i]) && upper.len() - 1 == n + 1;
    Ok(AStructure {
        parts,
        conditions: [c1, c2, c3, c4, c5],
    })
}

/// Requires an A-algebra that is minimal non-𝒩 and returns its structure,
/// which must satisfy all five conditions.
pub fn check_a_minimal_structure(l: &LieAlgebra) -> Result<AStructure> {
    if !is_a_algebra(l)?.0 {
        return Err(Error::PreconditionUnmet("not an A-algebra".into()));
    }
    if !is_minimal_non_n(l)?.flag {
        return Err(Error::PreconditionUnmet("not minimal non-N".into()));
    }
    let s = a_structure(l)?;
    if !s.holds() {
        return Err(Error::TheoremViolation(format!(
            "A-algebra structure conditions {:?} fail on a minimal non-N A-algebra",
            s.conditions
        )));
    }
    Ok(s)
}
