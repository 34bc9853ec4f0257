use super::algebra::{LieAlgebra, StructureConstants};
use super::derivation::Derivation;
use crate::error::{Error, Result};
use crate::exactlin::{axpy, zero_vector, Matrix, Vector};

/// `S ⋉ V` with `V` an abelian ideal and `[s, v] = rep(s) v`.
///
/// The basis is that of `S` followed by the standard basis of `V`.
pub fn semidirect(s: &LieAlgebra, rep: &[Matrix], v_dim: usize) -> Result<LieAlgebra> {
    let f = s.field();
    let k = s.dim();
    if rep.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: rep.len(),
        });
    }
    for m in rep {
        if m.rows() != v_dim || m.cols() != v_dim {
            return Err(Error::DimensionMismatch {
                expected: v_dim,
                got: m.rows().max(m.cols()),
            });
        }
        if m.field() != f {
            return Err(Error::FieldMismatch {
                expected: f,
                found: m.field().to_string(),
            });
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            let mut lhs = Matrix::zeros(f, v_dim, v_dim);
            for (c, coeff) in s.basis_bracket(a, b).iter().enumerate() {
                if !coeff.is_zero() {
                    lhs = lhs.add(&rep[c].scale(coeff));
                }
            }
            if lhs != rep[a].commutator(&rep[b]) {
                return Err(Error::NotARepresentation { a, b });
            }
        }
    }
    let n = k + v_dim;
    let mut sc = StructureConstants::new(f, n);
    for a in 0..k {
        for b in a + 1..k {
            let mut v = s.basis_bracket(a, b).clone();
            v.resize(n, f.zero());
            sc.set(a, b, v);
        }
        for t in 0..v_dim {
            let mut v = zero_vector(f, k);
            v.extend(rep[a].column(t));
            sc.set(a, k + t, v);
        }
    }
    if let Some(l) = s.labels() {
        let mut labels: Vec<String> = l.to_vec();
        labels.extend((1..=v_dim).map(|t| format!("v{t}")));
        sc.labels = Some(labels);
    }
    sc.validate()
}

/// `Fd ⋉ L` with `[d, x] = D x`; `d` becomes the first basis vector.
pub fn split_extension(l: &LieAlgebra, d: &Derivation) -> LieAlgebra {
    let f = l.field();
    let n = l.dim();
    let mut sc = StructureConstants::new(f, n + 1);
    for i in 0..n {
        let mut v = vec![f.zero()];
        v.extend(d.matrix().column(i));
        sc.set(0, i + 1, v);
        for j in i + 1..n {
            let mut v = vec![f.zero()];
            v.extend(l.basis_bracket(i, j).iter().cloned());
            sc.set(i + 1, j + 1, v);
        }
    }
    if let Some(lab) = l.labels() {
        let mut labels = vec!["d".to_string()];
        labels.extend(lab.iter().cloned());
        sc.labels = Some(labels);
    }
    sc.validate().expect("split extension by a derivation is a Lie algebra")
}

/// Rewrites `L` in the basis given by the columns of the invertible `p`.
pub fn change_basis(l: &LieAlgebra, p: &Matrix) -> Result<LieAlgebra> {
    let n = l.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: p.rows().max(p.cols()),
        });
    }
    let inv = p
        .inverse()
        .ok_or_else(|| Error::MalformedMatrix("change of basis is singular".into()))?;
    let cols: Vec<Vector> = (0..n).map(|j| p.column(j)).collect();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(inv.mul_vec(&l.br(&cols[i], &cols[j])));
        }
    }
    Ok(LieAlgebra::from_table_unchecked(l.field(), n, table))
}

/// Direct sum `L ⊕ K`.
pub fn direct_sum(l: &LieAlgebra, k: &LieAlgebra) -> Result<LieAlgebra> {
    if l.field() != k.field() {
        return Err(Error::FieldMismatch {
            expected: l.field(),
            found: k.field().to_string(),
        });
    }
    let f = l.field();
    let (a, b) = (l.dim(), k.dim());
    let n = a + b;
    let mut table = vec![zero_vector(f, n); n * n];
    for i in 0..a {
        for j in 0..a {
            let mut v = zero_vector(f, n);
            axpy(f, &mut v[..a], &f.one(), l.basis_bracket(i, j));
            table[i * n + j] = v;
        }
    }
    for i in 0..b {
        for j in 0..b {
            let mut v = zero_vector(f, n);
            axpy(f, &mut v[a..], &f.one(), k.basis_bracket(i, j));
            table[(a + i) * n + a + j] = v;
        }
    }
    Ok(LieAlgebra::from_table_unchecked(f, n, table))
}
