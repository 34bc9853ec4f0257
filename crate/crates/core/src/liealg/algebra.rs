use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_zero_vector, zero_vector, FieldSpec, Matrix, Scalar, Subspace, Vector};

/// Unvalidated structure constants: `table[i * dim + j]` is `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub field: FieldSpec,
    pub dim: usize,
    pub table: Vec<Vector>,
    pub labels: Option<Vec<String>>,
}

impl StructureConstants {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        StructureConstants {
            field,
            dim,
            table: vec![zero_vector(field, dim); dim * dim],
            labels: None,
        }
    }

    /// Sets `[e_i, e_j]` alone, leaving `[e_j, e_i]` untouched.
    pub fn set_raw(&mut self, i: usize, j: usize, v: Vector) {
        self.table[i * self.dim + j] = v;
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        let neg = v.iter().map(|x| self.field.neg(x)).collect();
        self.table[i * self.dim + j] = v;
        self.table[j * self.dim + i] = neg;
    }

    /// `[e_i, e_j] = sum coeff * e_k` from small integers.
    pub fn set_int(&mut self, i: usize, j: usize, coeffs: &[(usize, i64)]) {
        let mut v = zero_vector(self.field, self.dim);
        for &(k, c) in coeffs {
            v[k] = self.field.add(&v[k], &self.field.from_i64(c));
        }
        self.set(i, j, v);
    }

    pub fn with_labels(mut self, labels: &[&str]) -> Self {
        self.labels = Some(labels.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn validate(self) -> Result<LieAlgebra> {
        validate(self)
    }
}

/// A validated finite-dimensional solvable Lie algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    field: FieldSpec,
    dim: usize,
    table: Vec<Vector>,
    labels: Option<Vec<String>>,
    derived_length: usize,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {} over {}", self.dim, self.field)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = &self.table[i * self.dim + j];
                if !is_zero_vector(v) {
                    write!(f, "; [{},{}]=", self.label(i), self.label(j))?;
                    let mut first = true;
                    for (k, c) in v.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        if !first {
                            write!(f, "+")?;
                        }
                        first = false;
                        if !c.is_one() {
                            write!(f, "{c}*")?;
                        }
                        write!(f, "{}", self.label(k))?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

/// Checks alternating law, antisymmetry, Jacobi and solvability.
pub fn validate(sc: StructureConstants) -> Result<LieAlgebra> {
    let StructureConstants {
        field,
        dim: n,
        table,
        labels,
    } = sc;
    if table.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: table.len(),
        });
    }
    for v in &table {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|x| !field.contains(x)) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: format!("{bad:?}"),
            });
        }
    }
    if let Some(l) = &labels {
        if l.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: l.len(),
            });
        }
    }
    for i in 0..n {
        if let Some(k) = table[i * n + i].iter().position(|x| !x.is_zero()) {
            return Err(Error::AlternatingViolation { i, k });
        }
        for j in i + 1..n {
            let a = &table[i * n + j];
            let b = &table[j * n + i];
            for k in 0..n {
                if !field.add(&a[k], &b[k]).is_zero() {
                    return Err(Error::AntisymmetryViolation { i, j, k });
                }
            }
        }
    }
    let mut alg = LieAlgebra {
        field,
        dim: n,
        table,
        labels,
        derived_length: 0,
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !is_zero_vector(&alg.jacobiator(i, j, k)) {
                    return Err(Error::JacobiViolation { i, j, k });
                }
            }
        }
    }
    let series = alg.derived_series();
    let last = series.last().expect("nonempty");
    if !last.is_zero() {
        return Err(Error::NotSolvable { stable_dim: last.dim() });
    }
    alg.derived_length = series.len() - 1;
    Ok(alg)
}

impl LieAlgebra {
    /// Builds an algebra whose identities are known to hold, e.g. induced
    /// and quotient algebras.
    pub(crate) fn from_table_unchecked(field: FieldSpec, dim: usize, table: Vec<Vector>) -> Self {
        let mut alg = LieAlgebra {
            field,
            dim,
            table,
            labels: None,
            derived_length: 0,
        };
        debug_assert!((0..dim).all(|i| (i + 1..dim)
            .all(|j| (j + 1..dim).all(|k| is_zero_vector(&alg.jacobiator(i, j, k))))));
        alg.derived_length = alg.derived_series().len() - 1;
        alg
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        Self::from_table_unchecked(field, dim, vec![zero_vector(field, dim); dim * dim])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn derived_length(&self) -> usize {
        self.derived_length
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) {
        if let Some(l) = &labels {
            assert_eq!(l.len(), self.dim);
        }
        self.labels = labels;
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    /// `[e_i, e_j]`
    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn structure_constants(&self) -> StructureConstants {
        StructureConstants {
            field: self.field,
            dim: self.dim,
            table: self.table.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: w.len(),
                });
            }
        }
        Ok(self.br(u, v))
    }

    /// Bracket without the length check.
    pub fn br(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let f = self.field;
        let n = self.dim;
        let mut out = zero_vector(f, n);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let c = f.mul(a, b);
                axpy(f, &mut out, &c, &self.table[i * n + j]);
            }
        }
        out
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let f = self.field;
        let n = self.dim;
        let e = |t: usize| crate::exactlin::unit_vector(f, n, t);
        let mut s = self.br(&self.table[i * n + j], &e(k));
        let t = self.br(&self.table[j * n + k], &e(i));
        let u = self.br(&self.table[k * n + i], &e(j));
        for idx in 0..n {
            s[idx] = f.add(&f.add(&s[idx], &t[idx]), &u[idx]);
        }
        s
    }

    /// Matrix of `y -> [x, y]`, acting on column vectors.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.br(x, &crate::exactlin::unit_vector(self.field, n, j)))
            .collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| self.table[i * n + j].clone()).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    /// `[U, V]`
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        if u.ambient_dim() != self.dim || v.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.product(u, v))
    }

    pub(crate) fn product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut b = crate::exactlin::SpanBuilder::new(self.field, self.dim);
        for a in 0..u.dim() {
            for c in 0..v.dim() {
                if b.dim() == self.dim {
                    return b.finish();
                }
                b.insert(&self.br(u.row(a), v.row(c)));
            }
        }
        b.finish()
    }

    /// `L^(0) = L, L^(i+1) = [L^(i), L^(i)]`, until it stabilises.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.full()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.product(last, last);
            if &next == last {
                return out;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    /// `L^1 = L, L^(i+1) = [L^i, L]`, until it stabilises.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = self.full();
        let mut out = vec![full.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.product(last, &full);
            if &next == last {
                return out;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().expect("nonempty").is_zero()
    }

    /// Smallest `c` with `L^(c+1) = 0`; `None` when not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        s.last().expect("nonempty").is_zero().then(|| s.len() - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_is_not_solvable() {
        let q = FieldSpec::Rationals;
        let mut sc = StructureConstants::new(q, 3);
        sc.set_int(0, 1, &[(2, 1)]);
        sc.set_int(0, 2, &[(1, 1)]);
        sc.set_int(1, 2, &[(0, 1)]);
        assert_eq!(validate(sc), Err(Error::NotSolvable { stable_dim: 3 }));
    }

    #[test]
    fn jacobi_violation_reports_triple() {
        let q = FieldSpec::Rationals;
        let mut sc = StructureConstants::new(q, 3);
        sc.set_int(0, 1, &[(1, 1)]);
        sc.set_int(1, 2, &[(0, 1)]);
        assert!(matches!(validate(sc), Err(Error::JacobiViolation { i: 0, j: 1, k: 2 })));
    }

    #[test]
    fn alternating_checked_in_char_two() {
        let f2 = FieldSpec::Prime(2);
        let mut sc = StructureConstants::new(f2, 2);
        sc.set_raw(0, 0, vec![Scalar::Residue(0), Scalar::Residue(1)]);
        assert_eq!(validate(sc), Err(Error::AlternatingViolation { i: 0, k: 1 }));
    }

    #[test]
    fn antisymmetry_checked() {
        let q = FieldSpec::Rationals;
        let mut sc = StructureConstants::new(q, 2);
        sc.set_raw(0, 1, vec![q.zero(), q.one()]);
        assert_eq!(validate(sc), Err(Error::AntisymmetryViolation { i: 0, j: 1, k: 1 }));
    }

    #[test]
    fn abelian_is_valid() {
        let l = validate(StructureConstants::new(FieldSpec::Prime(3), 4)).unwrap();
        assert!(l.derived_length() <= 1);
        assert!(l.is_abelian());
        assert_eq!(l.nilpotency_class(), Some(1));
    }
}
