use serde::Serialize;

use crate::chief::{chief_series_with, conjugacy_classes, is_chief_factor, minimal_ideals};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::liealg::LieAlgebra;
use crate::series::{all_ideals, frattini_series_from, maximal_spaces, upper_nilpotent_series};

/// The four equivalent conditions for an extreme algebra, each computed on
/// its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremeCrosscheck {
    pub by_definition: bool,
    /// First `i` with `N_i/φ_i` not a chief factor.
    pub failing_index: Option<usize>,
    pub n: usize,
    pub m: usize,
    pub c: usize,
    pub quotients_one_complemented: bool,
    /// An ideal `B` with two complemented minimal ideals in `L/B`.
    pub offending_quotient: Option<Subspace>,
}

impl ExtremeCrosscheck {
    pub fn agree(&self) -> bool {
        let e = self.by_definition;
        (self.n == self.m) == e && (self.n == self.c) == e && self.quotients_one_complemented == e
    }
}

/// `N_i/φ_i` is a chief factor for every `i`; returns the first failure.
pub fn extreme_by_definition(l: &LieAlgebra) -> Result<(bool, Option<usize>)> {
    let upper = upper_nilpotent_series(l)?;
    let phis = frattini_series_from(l, &upper)?;
    for (i, phi) in phis.iter().enumerate() {
        if !is_chief_factor(l, &upper[i + 1], phi)? {
            return Ok((false, Some(i + 1)));
        }
    }
    Ok((true, None))
}

/// Number of minimal ideals of `L/B` having a complement, with maximal
/// subalgebras of the quotient read off as the maximals of `L` over `B`.
pub fn complemented_minimal_count(l: &LieAlgebra, maximals: &[Subspace], b: &Subspace) -> Result<usize> {
    let q = l.quotient(b)?;
    let over: Vec<&Subspace> = maximals.iter().filter(|m| b.is_subspace_of(m)).collect();
    let mut count = 0;
    for a in minimal_ideals(q.quotient())? {
        let a = q.pullback(&a);
        if over.iter().any(|m| !a.is_subspace_of(m)) {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether every proper quotient `L/B` has at most one complemented minimal
/// ideal; the witness is the first `B` that fails.
pub fn quotients_one_complemented(l: &LieAlgebra, maximals: &[Subspace]) -> Result<(bool, Option<Subspace>)> {
    for b in all_ideals(l)? {
        if b.is_full() {
            continue;
        }
        if complemented_minimal_count(l, maximals, &b)? > 1 {
            return Ok((false, Some(b)));
        }
    }
    Ok((true, None))
}

pub fn extreme_crosscheck(l: &LieAlgebra) -> Result<ExtremeCrosscheck> {
    let (by_definition, failing_index) = extreme_by_definition(l)?;
    let maximals = maximal_spaces(l)?;
    let n = upper_nilpotent_series(l)?.len() - 1;
    let m = conjugacy_classes(l, &maximals)?.m_count;
    let c = chief_series_with(l, None, &maximals)?.c_count;
    let (quotients_one_complemented, offending_quotient) = quotients_one_complemented(l, &maximals)?;
    Ok(ExtremeCrosscheck {
        by_definition,
        failing_index,
        n,
        m,
        c,
        quotients_one_complemented,
        offending_quotient,
    })
}

/// Extreme flag with its crosscheck; any disagreement between the four
/// conditions is an error.
pub fn is_extreme(l: &LieAlgebra) -> Result<(bool, ExtremeCrosscheck)> {
    let x = extreme_crosscheck(l)?;
    if !x.agree() {
        return Err(Error::TheoremViolation(format!(
            "extreme conditions disagree: definition {}, n {}, m {}, c {}, quotients {}",
            x.by_definition, x.n, x.m, x.c, x.quotients_one_complemented
        )));
    }
    Ok((x.by_definition, x))
}
