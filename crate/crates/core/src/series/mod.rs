//! Derived, lower central, nilpotent and Frattini series; maximal
//! subalgebras; nilregularity.

mod maximal;
mod nilradical;

use serde::Serialize;

pub use maximal::{
    frattini, intersect_all, maximal_spaces, maximal_spaces_ascending, maximal_subalgebras, MaximalSet,
};
pub use nilradical::{all_ideals, all_subalgebras, nilradical, nilradical_by_enumeration};

use crate::error::Result;
use crate::exactlin::{FieldSpec, Subspace};
use crate::liealg::{LieAlgebra, Subalgebra};

/// `0 = N_0 ⊂ N_1 ⊂ … ⊂ N_n = L`; the nilpotent length is `len - 1`.
pub fn upper_nilpotent_series(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    let mut out = vec![l.zero()];
    while !out.last().expect("nonempty").is_full() {
        let prev = out.last().expect("nonempty");
        let q = l.quotient(prev)?;
        let n = nilradical(q.quotient())?;
        out.push(q.pullback(&n));
    }
    Ok(out)
}

pub fn nilpotent_length(l: &LieAlgebra) -> Result<usize> {
    Ok(upper_nilpotent_series(l)?.len() - 1)
}

/// `N_k(L)`, with `N_k = L` past the nilpotent length.
pub fn upper_term(upper: &[Subspace], k: usize) -> &Subspace {
    &upper[k.min(upper.len() - 1)]
}

/// Derived and lower central series with the lower nilpotent series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerSeries {
    pub derived: Vec<Subspace>,
    pub lower_central: Vec<Subspace>,
    pub nilpotent_residual: Subspace,
    /// `Γ_0 = L ⊃ Γ_1 ⊃ … ⊃ Γ_s = 0`
    pub lower_nilpotent: Vec<Subspace>,
}

/// Last term of the lower central series of the subalgebra `U`.
pub fn nilpotent_residual_of(l: &LieAlgebra, u: &Subspace) -> Subspace {
    let mut cur = u.clone();
    loop {
        let next = l.product(&cur, u);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

pub fn lower_series(l: &LieAlgebra) -> LowerSeries {
    let derived = l.derived_series();
    let lower_central = l.lower_central_series();
    let nilpotent_residual = lower_central.last().expect("nonempty").clone();
    let mut lower_nilpotent = vec![l.full()];
    while !lower_nilpotent.last().expect("nonempty").is_zero() {
        let next = nilpotent_residual_of(l, lower_nilpotent.last().expect("nonempty"));
        debug_assert!(l.is_ideal(&next));
        lower_nilpotent.push(next);
    }
    LowerSeries {
        derived,
        lower_central,
        nilpotent_residual,
        lower_nilpotent,
    }
}

/// `φ_i(L)/N_{i-1}(L) = φ(L/N_{i-1}(L))` for `i = 1..=n(L)`.
pub fn frattini_series(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    let upper = upper_nilpotent_series(l)?;
    frattini_series_from(l, &upper)
}

pub fn frattini_series_from(l: &LieAlgebra, upper: &[Subspace]) -> Result<Vec<Subspace>> {
    let mut out = Vec::with_capacity(upper.len().saturating_sub(1));
    for prev in &upper[..upper.len() - 1] {
        let q = l.quotient(prev)?;
        out.push(q.pullback(&frattini(q.quotient())?));
    }
    Ok(out)
}

/// Largest `r` with `N_r(L) ⊆ U`.
pub fn compatibility_index(l: &LieAlgebra, u: &Subspace) -> Result<usize> {
    Ok(compatibility_index_in(&upper_nilpotent_series(l)?, u))
}

pub fn compatibility_index_in(upper: &[Subspace], u: &Subspace) -> usize {
    upper.iter().take_while(|s| s.is_subspace_of(u)).count() - 1
}

/// Outcome of [`nilregularity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Nilregularity {
    pub nilregular: bool,
    pub strongly_nilregular: bool,
    /// Class that broke the bound, when one did.
    pub witness_class: Option<usize>,
}

/// Nilregular: `N(U)` has class `< p - 1`. Strongly nilregular: every
/// `N_k(U)/N_{k-1}(U)` with `k` up to the compatibility index of `U` does.
/// Both hold by convention in characteristic zero.
pub fn nilregularity(l: &LieAlgebra, u: &Subalgebra) -> Result<Nilregularity> {
    let FieldSpec::Prime(p) = l.field() else {
        return Ok(Nilregularity {
            nilregular: true,
            strongly_nilregular: true,
            witness_class: None,
        });
    };
    let bound = p as usize - 1;
    let a = u.induced();
    let upper_a = upper_nilpotent_series(a)?;
    let class_of = |k: usize| -> usize {
        a.factor_class(upper_term(&upper_a, k), upper_term(&upper_a, k - 1))
            .expect("nilradical factors are nilpotent")
    };
    let c1 = class_of(1);
    let nilregular = c1 < bound;
    let r = compatibility_index(l, u.space())?;
    let mut witness = (!nilregular).then_some(c1);
    let mut strongly = true;
    for k in 1..=r {
        let c = class_of(k);
        if c >= bound {
            strongly = false;
            witness.get_or_insert(c);
            break;
        }
    }
    Ok(Nilregularity {
        nilregular,
        strongly_nilregular: strongly,
        witness_class: witness,
    })
}

/// All series at once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub derived: Vec<Subspace>,
    pub lower_central: Vec<Subspace>,
    pub upper_nilpotent: Vec<Subspace>,
    pub lower_nilpotent: Vec<Subspace>,
    /// Absent over `Q`, where maximal subalgebras are not enumerated.
    pub frattini_series: Option<Vec<Subspace>>,
    pub nilpotent_residual: Subspace,
    pub nilpotent_length: usize,
    pub derived_length: usize,
    pub nilpotency_class: Option<usize>,
}

pub fn series_report(l: &LieAlgebra) -> Result<SeriesReport> {
    let upper = upper_nilpotent_series(l)?;
    let low = lower_series(l);
    let frattini_series = if l.field().is_prime_field() {
        Some(frattini_series_from(l, &upper)?)
    } else {
        None
    };
    Ok(SeriesReport {
        nilpotent_length: upper.len() - 1,
        derived_length: l.derived_length(),
        nilpotency_class: l.nilpotency_class(),
        derived: low.derived,
        lower_central: low.lower_central,
        upper_nilpotent: upper,
        lower_nilpotent: low.lower_nilpotent,
        frattini_series,
        nilpotent_residual: low.nilpotent_residual,
    })
}
