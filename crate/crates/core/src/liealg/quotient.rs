use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace, Vector};

/// `L -> L/I`, with `L/I` written on the non-pivot coordinates of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    ideal: Subspace,
    quotient: LieAlgebra,
    transversal: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl QuotientMap {
    pub fn new(l: &LieAlgebra, ideal: &Subspace) -> Result<Self> {
        if ideal.ambient_dim() != l.dim() {
            return Err(Error::AmbientMismatch);
        }
        if !l.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        Ok(Self::new_unchecked(l, ideal))
    }

    pub(crate) fn new_unchecked(l: &LieAlgebra, ideal: &Subspace) -> Self {
        let f = l.field();
        let n = l.dim();
        let transversal = ideal.non_pivots();
        let q = transversal.len();
        let project = |v: &[crate::exactlin::Scalar]| -> Vector {
            let r = ideal.reduce(v);
            transversal.iter().map(|&t| r[t].clone()).collect()
        };
        let proj_cols: Vec<Vector> = (0..n).map(|j| project(&l.e(j))).collect();
        let projection = Matrix::from_columns(f, q, &proj_cols);
        let sec_cols: Vec<Vector> = transversal.iter().map(|&t| l.e(t)).collect();
        let section = Matrix::from_columns(f, n, &sec_cols);
        let mut table = Vec::with_capacity(q * q);
        for &a in &transversal {
            for &b in &transversal {
                table.push(project(l.basis_bracket(a, b)));
            }
        }
        let quotient = LieAlgebra::from_table_unchecked(f, q, table);
        QuotientMap {
            ideal: ideal.clone(),
            quotient,
            transversal,
            projection,
            section,
        }
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn quotient(&self) -> &LieAlgebra {
        &self.quotient
    }

    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[crate::exactlin::Scalar]) -> Vector {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, v: &[crate::exactlin::Scalar]) -> Vector {
        self.section.mul_vec(v)
    }

    /// `(S + I) / I`
    pub fn image(&self, s: &Subspace) -> Subspace {
        s.image(&self.projection)
    }

    /// Full preimage of a subspace of the quotient.
    pub fn pullback(&self, s: &Subspace) -> Subspace {
        s.image(&self.section).join(&self.ideal)
    }
}

impl LieAlgebra {
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientMap> {
        QuotientMap::new(self, ideal)
    }
}
