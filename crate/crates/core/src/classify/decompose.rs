use serde::Serialize;

use crate::chief::is_chief_factor;
use crate::error::{Error, Result};
use crate::exactlin::{enumerate_subspaces, Subspace};
use crate::liealg::LieAlgebra;
use crate::series::{frattini, frattini_series_from, nilradical, upper_nilpotent_series};

/// `L = B_1 + … + B_n` with `B_i = N(U_{i-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub b: Vec<Subspace>,
    /// `U_0 = L, U_1, …, U_{n-1}`
    pub u: Vec<Subspace>,
}

fn frattini_of(l: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
    let sub = l.subalgebra(s)?;
    Ok(s.lift(&frattini(sub.induced())?))
}

fn nilradical_of(l: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
    let sub = l.subalgebra(s)?;
    Ok(s.lift(&nilradical(sub.induced())?))
}

/// Builds `U_{k+1}` as a minimum-dimension subalgebra of `U_k` supplementing
/// `N_{k+1} ∩ U_k` and satisfying the Frattini condition, lexicographically
/// first on ties; then checks the four decomposition conditions.
pub fn decompose(l: &LieAlgebra) -> Result<Decomposition> {
    let upper = upper_nilpotent_series(l)?;
    let phis = frattini_series_from(l, &upper)?;
    let n = upper.len() - 1;
    let f = l.field();
    let mut u = vec![l.full()];
    for k in 0..n.saturating_sub(1) {
        let uk = u[k].clone();
        let nk1 = upper[k + 1].meet(&uk);
        let sub = l.subalgebra(&uk)?;
        let inner = sub.induced();
        let mut chosen = None;
        for d in uk.dim() - nk1.dim()..=uk.dim() {
            let mut any = false;
            for s in enumerate_subspaces(uk.dim(), f, Some(d))? {
                if !inner.is_subalgebra(&s) {
                    continue;
                }
                let s = uk.lift(&s);
                if s.join(&nk1) != uk {
                    continue;
                }
                any = true;
                let phi_s = frattini_of(l, &s)?;
                if upper[k + 1].meet(&s).is_subspace_of(&phi_s) && phi_s == phis[k + 1].meet(&s) {
                    chosen = Some(s);
                    break;
                }
            }
            if any {
                break;
            }
        }
        match chosen {
            Some(s) => u.push(s),
            None => {
                return Err(Error::ConstructionFailure(format!(
                    "no minimum supplement of N_{} satisfies the Frattini condition",
                    k + 1
                )))
            }
        }
    }
    let mut b = Vec::with_capacity(n);
    for uk in &u {
        b.push(nilradical_of(l, uk)?);
    }
    let dec = Decomposition { b, u };
    verify_decomposition(l, &upper, &phis, &dec)?;
    Ok(dec)
}

fn verify_decomposition(l: &LieAlgebra, upper: &[Subspace], phis: &[Subspace], dec: &Decomposition) -> Result<()> {
    let n = upper.len() - 1;
    let fail = |why: String| Err(Error::TheoremViolation(format!("decomposition: {why}")));
    if dec.b.len() != n {
        return fail("wrong number of parts".into());
    }
    for (k, uk) in dec.u.iter().enumerate() {
        if nilradical_of(l, uk)? != upper[k + 1].meet(uk) {
            return fail(format!("N(U_{k}) differs from N_{} ∩ U_{k}", k + 1));
        }
    }
    let mut acc = l.zero();
    for (i, bi) in dec.b.iter().enumerate() {
        if !l.is_nilpotent_subalgebra(bi) {
            return fail(format!("B_{} is not nilpotent", i + 1));
        }
        acc = acc.join(bi);
        if acc != upper[i + 1] {
            return fail(format!("B_1 + … + B_{} differs from N_{}", i + 1, i + 1));
        }
        for bj in &dec.b[i..] {
            if !l.product(bi, bj).is_subspace_of(bi) {
                return fail(format!("[B_{}, B_j] escapes B_{}", i + 1, i + 1));
            }
        }
    }
    if !acc.is_full() {
        return fail("parts do not span L".into());
    }
    for i in 1..n {
        let ui = dec.b[i..].iter().fold(l.zero(), |a, s| a.join(s));
        if ui != dec.u[i] {
            return fail(format!("U_{i} is not B_{} + … + B_n", i + 1));
        }
        let phi_u = frattini_of(l, &ui)?;
        if !upper[i].meet(&ui).is_subspace_of(&phi_u) || phi_u != phis[i].meet(&ui) {
            return fail(format!("Frattini condition fails at U_{i}"));
        }
    }
    Ok(())
}

/// `dim B_n = 1` and `N(U_k)/φ(U_k)` is a chief factor of `U_k` for every `k`.
pub fn check_extreme_decomposition(l: &LieAlgebra, dec: &Decomposition) -> Result<bool> {
    if dec.b.last().is_none_or(|b| b.dim() != 1) {
        return Ok(false);
    }
    for uk in &dec.u {
        let sub = l.subalgebra(uk)?;
        let inner = sub.induced();
        let nil = nilradical(inner)?;
        let phi = frattini(inner)?;
        if !is_chief_factor(inner, &nil, &phi)? {
            return Ok(false);
        }
    }
    Ok(true)
}
