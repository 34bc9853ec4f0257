use crate::error::{Error, Result};
use crate::exactlin::{budget, enumerate_subspaces, FieldSpec, Matrix, Subspace, Vector};
use crate::liealg::LieAlgebra;

impl LieAlgebra {
    /// Whether the subalgebra `U` is nilpotent, via `U^(k+1) = [U^k, U]`.
    pub fn is_nilpotent_subalgebra(&self, u: &Subspace) -> bool {
        self.subalgebra_class(u).is_some()
    }

    /// Nilpotency class of the subalgebra `U`.
    pub fn subalgebra_class(&self, u: &Subspace) -> Option<usize> {
        self.factor_class(u, &Subspace::zero(self.field(), self.dim()))
    }

    /// Smallest `c` with `A^(c+1) ⊆ B`, the powers taken inside `A`.
    pub fn factor_class(&self, a: &Subspace, b: &Subspace) -> Option<usize> {
        let mut cur = a.clone();
        let mut c = 0;
        loop {
            if cur.is_subspace_of(b) {
                return Some(c);
            }
            let next = self.product(&cur, a);
            if next == cur {
                return None;
            }
            cur = next;
            c += 1;
        }
    }
}

/// Largest nilpotent ideal.
///
/// Over `F_p` this is the sum of the nilpotent principal ideals `I(v)`, one
/// per line. Over `Q` it is the common kernel of the forms
/// `x -> tr(ad x · ad y_1 ⋯ ad y_k)` with the `y`s from a complement of `L²`.
pub fn nilradical(l: &LieAlgebra) -> Result<Subspace> {
    match l.field() {
        FieldSpec::Rationals => nilradical_trace(l),
        FieldSpec::Prime(_) => nilradical_lines(l),
    }
}

fn nilradical_lines(l: &LieAlgebra) -> Result<Subspace> {
    let n = l.dim();
    let f = l.field();
    budget().check_dim(f, n)?;
    let mut acc = Subspace::zero(f, n);
    for line in enumerate_subspaces(n, f, Some(1))? {
        let v = line.row(0);
        if acc.contains_vector(v) {
            continue;
        }
        let i = l.ideal_closure(&line);
        if l.is_nilpotent_subalgebra(&i) {
            acc = acc.join(&i);
            if acc.is_full() {
                break;
            }
        }
    }
    Ok(acc)
}

fn multisets(d: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for t in start..d {
        cur.push(t);
        multisets(d, k, t, cur, out);
        cur.pop();
    }
}

fn nilradical_trace(l: &LieAlgebra) -> Result<Subspace> {
    let n = l.dim();
    let f = l.field();
    if n == 0 {
        return Ok(l.zero());
    }
    let l2 = l.product(&l.full(), &l.full());
    let comp = l2.non_pivots();
    let ads: Vec<Matrix> = (0..n).map(|j| l.ad_basis(j)).collect();
    let mut words = Vec::new();
    for k in 0..n {
        multisets(comp.len(), k, 0, &mut Vec::new(), &mut words);
    }
    let mut rows: Vec<Vector> = Vec::new();
    for w in words {
        let mut p = Matrix::identity(f, n);
        for &t in &w {
            p = p.mul(&ads[comp[t]]);
        }
        rows.push(ads.iter().map(|a| a.mul(&p).trace()).collect());
    }
    let n_space = Matrix::from_rows(f, rows, n)?.kernel();
    if !l.is_ideal(&n_space) || !l.is_nilpotent_subalgebra(&n_space) {
        return Err(Error::TheoremViolation(
            "trace-form kernel is not a nilpotent ideal".into(),
        ));
    }
    Ok(n_space)
}

/// Every ideal of `L`, in enumeration order.
pub fn all_ideals(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    budget().check_dim(l.field(), l.dim())?;
    Ok(enumerate_subspaces(l.dim(), l.field(), None)?
        .filter(|s| l.is_ideal(s))
        .collect())
}

/// Every subalgebra of `L`, in enumeration order.
pub fn all_subalgebras(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    budget().check_dim(l.field(), l.dim())?;
    Ok(enumerate_subspaces(l.dim(), l.field(), None)?
        .filter(|s| l.is_subalgebra(s))
        .collect())
}

/// Independent nilradical: a nilpotent ideal of maximum dimension among all
/// enumerated subspaces.
pub fn nilradical_by_enumeration(l: &LieAlgebra) -> Result<Subspace> {
    let mut best: Option<Subspace> = None;
    for s in all_ideals(l)? {
        if l.is_nilpotent_subalgebra(&s) && best.as_ref().is_none_or(|b| s.dim() > b.dim()) {
            best = Some(s);
        }
    }
    Ok(best.unwrap_or_else(|| l.zero()))
}
