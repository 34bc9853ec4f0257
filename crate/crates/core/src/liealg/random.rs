use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::LieAlgebra;
use super::catalog::catalog;
use super::construct::{change_basis, semidirect, split_extension};
use super::derivation::Derivation;
use crate::error::{Error, Result};
use crate::exactlin::{budget, FieldSpec, Matrix, Scalar, Subspace, Vector};

const MAX_ATTEMPTS: usize = 64;

pub(crate) fn random_scalar(rng: &mut impl Rng, f: FieldSpec) -> Scalar {
    Scalar::Residue(rng.random_range(0..f.modulus().expect("prime field")))
}

pub(crate) fn random_vector(rng: &mut impl Rng, f: FieldSpec, n: usize) -> Vector {
    (0..n).map(|_| random_scalar(rng, f)).collect()
}

fn random_matrix(rng: &mut impl Rng, f: FieldSpec, r: usize, c: usize) -> Matrix {
    let rows = (0..r).map(|_| random_vector(rng, f, c)).collect();
    Matrix::from_rows(f, rows, c).expect("well-formed")
}

fn random_invertible(rng: &mut impl Rng, f: FieldSpec, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, f, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

fn random_combination(rng: &mut impl Rng, f: FieldSpec, basis: &[Matrix], n: usize) -> Matrix {
    let mut acc = Matrix::zeros(f, n, n);
    for b in basis {
        acc = acc.add(&b.scale(&random_scalar(rng, f)));
    }
    acc
}

/// A random solvable algebra of dimension `target_dim` over `F_p`.
///
/// Starting from an abelian algebra of dimension one or two (or, when there
/// is room, `T2` acting on `F_p^p` with `y` a cyclic shift), each of the
/// `stages` steps applies one extension: by a random derivation, by the
/// adjoint action on an ideal or on a quotient, or by a module built from
/// characters of `L/L²`. Leftover dimensions are filled by derivation
/// extensions. The result is optionally rewritten in a random basis.
/// `stages == 0` gives the abelian algebra.
pub fn random_solvable(field: FieldSpec, target_dim: usize, stages: usize, seed: u64) -> Result<LieAlgebra> {
    if !field.is_prime_field() {
        return Err(Error::UnsupportedOverRationals("random_solvable"));
    }
    budget().check_dim(field, target_dim)?;
    if stages == 0 || target_dim <= 1 {
        return Ok(LieAlgebra::abelian(field, target_dim));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(l) = attempt(&mut rng, field, target_dim, stages) {
            return l.structure_constants().validate();
        }
    }
    Err(Error::RetryLimit(MAX_ATTEMPTS))
}

fn attempt(rng: &mut ChaCha8Rng, f: FieldSpec, target: usize, stages: usize) -> Option<LieAlgebra> {
    let p = f.modulus().expect("prime field") as usize;
    let mut l = if target >= p + 2 && rng.random_bool(0.25) {
        shift_base(rng, f)?
    } else {
        LieAlgebra::abelian(f, rng.random_range(1..=2usize.min(target - 1)))
    };
    for _ in 0..stages {
        let room = target - l.dim();
        if room == 0 {
            break;
        }
        l = match rng.random_range(0..4u32) {
            0 => derivation_step(rng, &l),
            1 => adjoint_step(rng, &l, room, false)?,
            2 => adjoint_step(rng, &l, room, true)?,
            _ => character_step(rng, &l, room)?,
        };
    }
    while l.dim() < target {
        l = derivation_step(rng, &l);
    }
    if rng.random_bool(0.5) {
        let p = random_invertible(rng, f, l.dim());
        l = change_basis(&l, &p).ok()?;
    }
    Some(l)
}

fn derivation_step(rng: &mut ChaCha8Rng, l: &LieAlgebra) -> LieAlgebra {
    let f = l.field();
    let basis: Vec<Matrix> = l.derivations().into_iter().map(|d| d.matrix().clone()).collect();
    let m = random_combination(rng, f, &basis, l.dim());
    let d = Derivation::new(l, m).expect("combination of derivations");
    split_extension(l, &d)
}

fn candidate_ideals(rng: &mut ChaCha8Rng, l: &LieAlgebra) -> Vec<Subspace> {
    let mut c = vec![l.full()];
    let d = l.derived_series();
    c.extend(d.into_iter().skip(1));
    let v = random_vector(rng, l.field(), l.dim());
    c.push(l.ideal_closure(&Subspace::span(l.field(), l.dim(), &[v])));
    c.retain(|s| !s.is_zero());
    c.sort();
    c.dedup();
    c
}

/// Extends by `I` (ad restricted) or by `L/I` (ad induced).
fn adjoint_step(rng: &mut ChaCha8Rng, l: &LieAlgebra, room: usize, quotient: bool) -> Option<LieAlgebra> {
    let f = l.field();
    let n = l.dim();
    let mut cands = candidate_ideals(rng, l);
    if quotient {
        cands.push(l.zero());
        cands.retain(|i| !i.is_full() && i.codim() <= room);
    } else {
        cands.retain(|i| i.dim() <= room);
    }
    if cands.is_empty() {
        return character_step(rng, l, room);
    }
    let i = cands[rng.random_range(0..cands.len())].clone();
    let reps: Vec<Matrix> = if quotient {
        let q = l.quotient(&i).ok()?;
        (0..n)
            .map(|a| q.projection().mul(&l.ad_basis(a)).mul(q.section()))
            .collect()
    } else {
        (0..n)
            .map(|a| {
                let cols: Vec<Vector> = (0..i.dim())
                    .map(|s| i.coordinates(&l.br(&l.e(a), i.row(s))).expect("ideal"))
                    .collect();
                Matrix::from_columns(f, i.dim(), &cols)
            })
            .collect()
    };
    let k = reps[0].rows();
    semidirect(l, &reps, k).ok()
}

/// Module on which `x` acts by `sum_t λ_t(x) A^t`, the `λ_t` characters of
/// `L/L²` and `A` a random square matrix.
fn character_step(rng: &mut ChaCha8Rng, l: &LieAlgebra, room: usize) -> Option<LieAlgebra> {
    let f = l.field();
    let n = l.dim();
    let k = rng.random_range(1..=room.min(3));
    let l2 = l.product(&l.full(), &l.full());
    let chars = l2.basis().kernel();
    let a = random_matrix(rng, f, k, k);
    let powers: Vec<Matrix> = (0..k).map(|t| a.pow(t + 1)).collect();
    let lambdas: Vec<Vector> = (0..k)
        .map(|_| {
            let coeffs = random_vector(rng, f, chars.dim());
            chars.combine(&coeffs)
        })
        .collect();
    let reps: Vec<Matrix> = (0..n)
        .map(|x| {
            let mut m = Matrix::zeros(f, k, k);
            for (lam, pw) in lambdas.iter().zip(&powers) {
                if !lam[x].is_zero() {
                    m = m.add(&pw.scale(&lam[x]));
                }
            }
            m
        })
        .collect();
    semidirect(l, &reps, k).ok()
}

/// `T2 ⋉ F_p^p` with `x` acting as `diag(c, c+1, …)` and `y` as a scaled
/// cyclic shift. `y` acts invertibly, so the nilpotent length is 3.
fn shift_base(rng: &mut ChaCha8Rng, f: FieldSpec) -> Option<LieAlgebra> {
    let t2 = catalog("T2", Some(f)).ok()?;
    let p = f.modulus().expect("prime field") as usize;
    let c = random_scalar(rng, f);
    let mu = f.from_i64(rng.random_range(1..p as i64));
    let mut x = Matrix::zeros(f, p, p);
    let mut y = Matrix::zeros(f, p, p);
    for i in 0..p {
        x.set(i, i, f.add(&c, &f.from_i64(i as i64)));
        y.set((i + 1) % p, i, mu.clone());
    }
    semidirect(&t2, &[x, y], p).ok()
}
