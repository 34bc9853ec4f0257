use crate::error::{Error, Result};
use crate::exactlin::{budget, enumerate_subspaces, Subspace};
use crate::liealg::{LieAlgebra, Subalgebra};

/// All maximal subalgebras with their cores and compatibility indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSet {
    pub maximals: Vec<Subalgebra>,
    pub cores: Vec<Subspace>,
    pub compatibility: Vec<usize>,
    pub frattini: Subspace,
}

impl MaximalSet {
    pub fn spaces(&self) -> Vec<Subspace> {
        self.maximals.iter().map(|m| m.space().clone()).collect()
    }
}

fn require_prime(l: &LieAlgebra, what: &'static str) -> Result<()> {
    if !l.field().is_prime_field() {
        return Err(Error::UnsupportedOverRationals(what));
    }
    budget().check_dim(l.field(), l.dim())
}

/// Maximal subalgebras by a descending-dimension scan: a proper subalgebra
/// is maximal exactly when no larger maximal one already found contains it.
pub fn maximal_spaces(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    require_prime(l, "maximal_subalgebras")?;
    let n = l.dim();
    let mut found: Vec<Subspace> = Vec::new();
    for d in (0..n).rev() {
        let before = found.len();
        for s in enumerate_subspaces(n, l.field(), Some(d))? {
            if found[..before].iter().any(|m| s.is_subspace_of(m)) {
                continue;
            }
            if l.is_subalgebra(&s) {
                found.push(s);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// Same set by an ascending scan over the full subalgebra lattice: keep the
/// proper subalgebras lying in no strictly larger proper subalgebra.
pub fn maximal_spaces_ascending(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    require_prime(l, "maximal_subalgebras")?;
    let subs: Vec<Subspace> = super::all_subalgebras(l)?
        .into_iter()
        .filter(|s| !s.is_full())
        .collect();
    let mut out: Vec<Subspace> = subs
        .iter()
        .filter(|s| !subs.iter().any(|t| t.dim() > s.dim() && s.is_subspace_of(t)))
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}

pub fn intersect_all(l: &LieAlgebra, spaces: &[Subspace]) -> Subspace {
    spaces.iter().fold(l.full(), |acc, m| acc.meet(m))
}

/// `φ(L)`, the intersection of the maximal subalgebras.
pub fn frattini(l: &LieAlgebra) -> Result<Subspace> {
    Ok(intersect_all(l, &maximal_spaces(l)?))
}

pub fn maximal_subalgebras(l: &LieAlgebra) -> Result<MaximalSet> {
    let spaces = maximal_spaces(l)?;
    let upper = super::upper_nilpotent_series(l)?;
    let frattini = intersect_all(l, &spaces);
    let mut maximals = Vec::with_capacity(spaces.len());
    let mut cores = Vec::with_capacity(spaces.len());
    let mut compatibility = Vec::with_capacity(spaces.len());
    for s in spaces {
        cores.push(l.core(&s));
        compatibility.push(super::compatibility_index_in(&upper, &s));
        maximals.push(Subalgebra::new(l, s)?);
    }
    Ok(MaximalSet {
        maximals,
        cores,
        compatibility,
        frattini,
    })
}
