use super::algebra::LieAlgebra;
use super::quotient::QuotientMap;
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vector, sub_vectors, Matrix, Subspace, Vector};

/// A linear map `D` with `D[x,y] = [Dx,y] + [x,Dy]`, acting on columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    matrix: Matrix,
}

impl Derivation {
    pub fn new(l: &LieAlgebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != l.dim() || matrix.cols() != l.dim() {
            return Err(Error::DimensionMismatch {
                expected: l.dim(),
                got: matrix.rows().max(matrix.cols()),
            });
        }
        if !is_derivation(l, &matrix) {
            return Err(Error::NotADerivation);
        }
        Ok(Derivation { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[crate::exactlin::Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// The induced map on `L/I`; `I` must be `D`-invariant.
    pub fn induced(&self, q: &QuotientMap) -> Result<Derivation> {
        let i = q.ideal();
        if !i.image(&self.matrix).is_subspace_of(i) {
            return Err(Error::PreconditionUnmet(
                "the ideal is not invariant under the derivation".into(),
            ));
        }
        let m = q.projection().mul(&self.matrix).mul(q.section());
        Ok(Derivation { matrix: m })
    }
}

pub fn is_derivation(l: &LieAlgebra, d: &Matrix) -> bool {
    let n = l.dim();
    let f = l.field();
    let cols: Vec<Vector> = (0..n).map(|j| d.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(l.basis_bracket(i, j));
            let a = l.br(&cols[i], &l.e(j));
            let b = l.br(&l.e(i), &cols[j]);
            let rhs: Vector = a.iter().zip(&b).map(|(x, y)| f.add(x, y)).collect();
            if !is_zero_vector(&sub_vectors(f, &lhs, &rhs)) {
                return false;
            }
        }
    }
    true
}

impl LieAlgebra {
    /// Basis of the derivation algebra, from the Leibniz linear system.
    pub fn derivations(&self) -> Vec<Derivation> {
        let n = self.dim();
        let f = self.field();
        // unknown d[m][l] (coefficient of e_m in D e_l) sits at index m*n + l
        let mut rows: Vec<Vector> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let cij = self.basis_bracket(i, j);
                for m in 0..n {
                    let mut row = vec![f.zero(); n * n];
                    for (l, c) in cij.iter().enumerate() {
                        if !c.is_zero() {
                            row[m * n + l] = f.add(&row[m * n + l], c);
                        }
                    }
                    for k in 0..n {
                        let ckj = &self.basis_bracket(k, j)[m];
                        if !ckj.is_zero() {
                            row[k * n + i] = f.sub(&row[k * n + i], ckj);
                        }
                        let cik = &self.basis_bracket(i, k)[m];
                        if !cik.is_zero() {
                            row[k * n + j] = f.sub(&row[k * n + j], cik);
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            Subspace::full(f, n * n)
        } else {
            Matrix::from_rows(f, rows, n * n).expect("well-formed").kernel()
        };
        kernel
            .vectors()
            .into_iter()
            .map(|v| {
                let mrows: Vec<Vector> = v.chunks(n).map(|c| c.to_vec()).collect();
                Derivation {
                    matrix: Matrix::from_rows(f, mrows, n).expect("well-formed"),
                }
            })
            .collect()
    }

    /// `Ok(None)` when `I` is invariant under every derivation, otherwise a
    /// derivation moving it.
    pub fn characteristic_witness(&self, i: &Subspace) -> Option<Derivation> {
        self.derivations()
            .into_iter()
            .find(|d| !i.image(d.matrix()).is_subspace_of(i))
    }

    pub fn is_characteristic(&self, i: &Subspace) -> bool {
        self.characteristic_witness(i).is_none()
    }
}
