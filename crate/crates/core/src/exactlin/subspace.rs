use std::cmp::Ordering;
use std::fmt;

use super::field::{FieldSpec, Scalar};
use super::matrix::{axpy, is_zero_vector, zero_vector, Matrix, Vector};
use crate::error::{Error, Result};

/// A linear subspace of `F^n`, stored by its reduced row echelon basis.
///
/// The RREF basis is unique, so structural equality is span equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}^{}) {}", self.dim(), self.field(), self.ambient_dim, self)
    }
}

/// Prints the RREF rows, e.g. `<[1,0,2],[0,1,1]>`.
impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for r in 0..self.dim() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, x) in self.basis.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, ">")
    }
}

/// Dimension first, then the row-major entries of the basis matrix.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

/// Serialized as `{"dim": d, "basis": [[..], ..]}` with entries as strings.
impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<String>> = (0..self.dim())
            .map(|r| self.basis.row(r).iter().map(|x| x.to_string()).collect())
            .collect();
        let mut st = ser.serialize_struct("Subspace", 2)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &rows)?;
        st.end()
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Incrementally maintained, fully reduced echelon basis.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: FieldSpec, n: usize) -> Self {
        SpanBuilder {
            field,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        SpanBuilder {
            field: s.field(),
            n: s.ambient_dim,
            rows: s.vectors(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` against the current rows; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = f.neg(&w[p]);
                axpy(f, &mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v`; returns the new reduced row when the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Option<Vector> {
        debug_assert_eq!(v.len(), self.n);
        let f = self.field;
        let mut w = self.reduce(v);
        let p = w.iter().position(|x| !x.is_zero())?;
        let inv = f.inv(&w[p]).expect("nonzero");
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = f.neg(&row[p]);
                axpy(f, row, &c, &w);
            }
        }
        self.rows.push(w.clone());
        self.pivots.push(p);
        Some(w)
    }

    pub fn finish(self) -> Subspace {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        let mut rows = self.rows;
        let sorted: Vec<Vector> = order.iter().map(|&i| std::mem::take(&mut rows[i])).collect();
        let basis = Matrix::from_rows(self.field, sorted, self.n).expect("well-formed rows");
        Subspace {
            ambient_dim: self.n,
            basis,
            pivots,
        }
    }
}

impl Subspace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    /// Canonical span of `vectors` inside `F^n`.
    pub fn span(field: FieldSpec, n: usize, vectors: &[Vector]) -> Self {
        let mut b = SpanBuilder::new(field, n);
        for v in vectors {
            assert_eq!(v.len(), n, "vector length does not match ambient dimension");
            b.insert(v);
        }
        b.finish()
    }

    /// Wraps an already reduced basis. Used by the enumerator, which
    /// generates RREF matrices directly.
    pub(crate) fn from_rref_unchecked(basis: Matrix, pivots: Vec<usize>) -> Self {
        Subspace {
            ambient_dim: basis.cols(),
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot set; they index a canonical complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        self.basis.row(r)
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let f = self.field();
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = f.neg(&w[p]);
                axpy(f, &mut w, &c, self.basis.row(r));
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.ambient_dim);
        let f = self.field();
        // Only the pivot entries are needed to decide membership: the
        // residual is v - sum v[p_r] * row_r.
        if self.is_full() {
            return true;
        }
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = f.neg(&w[p]);
                axpy(f, &mut w, &c, self.basis.row(r));
            }
        }
        is_zero_vector(&w)
    }

    /// `self ⊆ other`
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() <= other.dim()
            && (0..self.dim()).all(|r| other.contains_vector(self.row(r)))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let recon = self.combine(&coords);
        (recon.as_slice() == v).then_some(coords)
    }

    /// `sum coords[r] * row_r`
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let f = self.field();
        let mut out = zero_vector(f, self.ambient_dim);
        for (r, c) in coords.iter().enumerate() {
            axpy(f, &mut out, c, self.basis.row(r));
        }
        out
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim || self.field() != other.field() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.join(other))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.meet(other))
    }

    /// Unchecked sum; panics on ambient mismatch.
    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        if other.dim() > self.dim() {
            return other.join(self);
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut b = SpanBuilder::from_subspace(self);
        for r in 0..other.dim() {
            b.insert(other.row(r));
        }
        b.finish()
    }

    /// Unchecked intersection; panics on ambient mismatch.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(f, self.ambient_dim);
        }
        if self.is_subspace_of(other) {
            return self.clone();
        }
        if other.is_subspace_of(self) {
            return other.clone();
        }
        // Solve sum a_r s_r = sum b_t o_t; the intersection is spanned by the
        // a-parts of the solutions.
        let ka = self.dim();
        let mut cols: Vec<Vector> = self.vectors();
        cols.extend(other.vectors());
        let m = Matrix::from_columns(f, self.ambient_dim, &cols);
        let ker = m.kernel();
        let vecs: Vec<Vector> = ker
            .vectors()
            .iter()
            .map(|sol| self.combine(&sol[..ka]))
            .collect();
        Subspace::span(f, self.ambient_dim, &vecs)
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let vecs: Vec<Vector> = (0..self.dim()).map(|r| map.mul_vec(self.row(r))).collect();
        Subspace::span(self.field(), map.rows(), &vecs)
    }

    /// Embeds a subspace given in coordinates of `self`'s basis.
    pub fn lift(&self, inner: &Subspace) -> Subspace {
        assert_eq!(inner.ambient_dim, self.dim());
        let vecs: Vec<Vector> = inner.vectors().iter().map(|c| self.combine(c)).collect();
        Subspace::span(self.field(), self.ambient_dim, &vecs)
    }

    /// Coordinates of a subspace `inner ⊆ self` in `self`'s basis.
    pub fn restrict(&self, inner: &Subspace) -> Option<Subspace> {
        let mut vecs = Vec::with_capacity(inner.dim());
        for v in inner.vectors() {
            vecs.push(self.coordinates(&v)?);
        }
        Some(Subspace::span(self.field(), self.dim(), &vecs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(f: FieldSpec, n: usize, i: usize) -> Vector {
        super::super::matrix::unit_vector(f, n, i)
    }

    #[test]
    fn sum_examples() {
        let f3 = FieldSpec::Prime(3);
        let a = Subspace::span(f3, 3, &[e(f3, 3, 0)]);
        assert_eq!(a.sum(&Subspace::zero(f3, 3)).unwrap(), a);
        let b = Subspace::span(f3, 3, &[e(f3, 3, 1)]);
        assert_eq!(
            a.sum(&b).unwrap(),
            Subspace::span(f3, 3, &[e(f3, 3, 0), e(f3, 3, 1)])
        );
        let f2 = FieldSpec::Prime(2);
        let diag = Subspace::span(f2, 2, &[vec![Scalar::Residue(1), Scalar::Residue(1)]]);
        let line = Subspace::span(f2, 2, &[e(f2, 2, 1)]);
        assert_eq!(diag.sum(&line).unwrap(), Subspace::full(f2, 2));
    }

    #[test]
    fn intersect_examples() {
        let q = FieldSpec::Rationals;
        let a = Subspace::span(q, 3, &[e(q, 3, 0), e(q, 3, 1)]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        let l1 = Subspace::span(q, 3, &[e(q, 3, 0)]);
        let l2 = Subspace::span(q, 3, &[e(q, 3, 1)]);
        assert!(l1.intersect(&l2).unwrap().is_zero());
        let b = Subspace::span(q, 3, &[e(q, 3, 1), e(q, 3, 2)]);
        assert_eq!(a.intersect(&b).unwrap(), l2);
    }

    #[test]
    fn ambient_mismatch() {
        let f2 = FieldSpec::Prime(2);
        let a = Subspace::full(f2, 2);
        let b = Subspace::full(f2, 3);
        assert_eq!(a.sum(&b), Err(Error::AmbientMismatch));
        assert_eq!(a.intersect(&b), Err(Error::AmbientMismatch));
        let c = Subspace::full(FieldSpec::Prime(3), 2);
        assert_eq!(a.sum(&c), Err(Error::AmbientMismatch));
    }

    #[test]
    fn canonical_basis() {
        let q = FieldSpec::Rationals;
        let v1 = vec![q.from_i64(2), q.from_i64(4), q.from_i64(0)];
        let v2 = vec![q.from_i64(1), q.from_i64(1), q.from_i64(1)];
        let s = Subspace::span(q, 3, &[v1.clone(), v2.clone()]);
        let t = Subspace::span(q, 3, &[v2, v1]);
        assert_eq!(s, t);
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.to_string(), "<[1,0,2],[0,1,-1]>");
    }

    #[test]
    fn coordinates_round_trip() {
        let f5 = FieldSpec::Prime(5);
        let s = Subspace::span(
            f5,
            3,
            &[vec![f5.from_i64(1), f5.from_i64(2), f5.from_i64(3)]],
        );
        let v = vec![f5.from_i64(2), f5.from_i64(4), f5.from_i64(1)];
        assert_eq!(s.coordinates(&v), Some(vec![f5.from_i64(2)]));
        assert_eq!(s.coordinates(&e(f5, 3, 2)), None);
    }
}
