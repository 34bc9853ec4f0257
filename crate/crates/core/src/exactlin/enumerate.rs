use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Limits on exhaustive work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest number of subspaces a single enumeration may produce.
    pub max_subspaces: u128,
    pub max_dim_f2: usize,
    pub max_dim_f3: usize,
    pub max_dim_f5: usize,
    /// Limit for every other prime.
    pub max_dim_other: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_subspaces: 1_000_000,
            max_dim_f2: 6,
            max_dim_f3: 5,
            max_dim_f5: 4,
            max_dim_other: 3,
        }
    }
}

impl Budget {
    pub fn dim_limit(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(2) => self.max_dim_f2,
            FieldSpec::Prime(3) => self.max_dim_f3,
            FieldSpec::Prime(5) => self.max_dim_f5,
            FieldSpec::Prime(_) => self.max_dim_other,
            FieldSpec::Rationals => usize::MAX,
        }
    }

    pub fn check_dim(&self, field: FieldSpec, dim: usize) -> Result<()> {
        let limit = self.dim_limit(field);
        if dim > limit {
            return Err(Error::DimensionBudget { field, dim, limit });
        }
        Ok(())
    }
}

fn global() -> &'static RwLock<Budget> {
    static B: OnceLock<RwLock<Budget>> = OnceLock::new();
    B.get_or_init(|| RwLock::new(Budget::default()))
}

/// The process-wide budget used by the exhaustive algorithms.
pub fn budget() -> Budget {
    *global().read().expect("budget lock")
}

pub fn set_budget(b: Budget) {
    *global().write().expect("budget lock") = b;
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    num / den
}

/// Total number of subspaces the enumeration would produce.
pub fn subspace_count(n: usize, q: u128, dim_filter: Option<usize>) -> u128 {
    match dim_filter {
        Some(k) => gaussian_binomial(n, k, q),
        None => (0..=n).map(|k| gaussian_binomial(n, k, q)).fold(0u128, |a, b| a.saturating_add(b)),
    }
}

const CACHE_LIMIT: u128 = 100_000;

type Key = (u32, usize, usize);

fn cache() -> &'static Mutex<HashMap<Key, Arc<Vec<Subspace>>>> {
    static C: OnceLock<Mutex<HashMap<Key, Arc<Vec<Subspace>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All `k`-dimensional subspaces of `F_p^n`, sorted.
fn layer(p: u32, n: usize, k: usize) -> Arc<Vec<Subspace>> {
    let count = gaussian_binomial(n, k, p as u128);
    if count <= CACHE_LIMIT {
        if let Some(hit) = cache().lock().expect("cache lock").get(&(p, n, k)) {
            return hit.clone();
        }
    }
    let field = FieldSpec::Prime(p);
    let mut out = Vec::with_capacity(count as usize);
    let mut pivots = Vec::with_capacity(k);
    pivot_sets(n, k, 0, &mut pivots, &mut |piv| fill_free(field, n, piv, &mut out));
    out.sort();
    let out = Arc::new(out);
    if count <= CACHE_LIMIT {
        cache().lock().expect("cache lock").insert((p, n, k), out.clone());
    }
    out
}

fn pivot_sets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for c in start..n {
        if n - c < k - cur.len() {
            break;
        }
        cur.push(c);
        pivot_sets(n, k, c + 1, cur, f);
        cur.pop();
    }
}

fn fill_free(field: FieldSpec, n: usize, pivots: &[usize], out: &mut Vec<Subspace>) {
    let p = field.modulus().expect("prime field");
    let k = pivots.len();
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..n {
            if !pivots.contains(&c) {
                free.push((r, c));
            }
        }
    }
    let mut digits = vec![0u32; free.len()];
    loop {
        let mut rows = vec![vec![Scalar::Residue(0); n]; k];
        for (r, &pc) in pivots.iter().enumerate() {
            rows[r][pc] = Scalar::Residue(1);
        }
        for (&(r, c), &d) in free.iter().zip(&digits) {
            rows[r][c] = Scalar::Residue(d);
        }
        let basis = Matrix::from_rows(field, rows, n).expect("well-formed");
        out.push(Subspace::from_rref_unchecked(basis, pivots.to_vec()));
        // odometer
        let mut i = 0;
        loop {
            if i == digits.len() {
                return;
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Stream over subspaces, ordered by dimension and then by the row-major
/// entries of the canonical basis.
pub struct SubspaceStream {
    layers: Vec<Arc<Vec<Subspace>>>,
    layer: usize,
    pos: usize,
}

impl Iterator for SubspaceStream {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        while self.layer < self.layers.len() {
            let l = &self.layers[self.layer];
            if self.pos < l.len() {
                self.pos += 1;
                return Some(l[self.pos - 1].clone());
            }
            self.layer += 1;
            self.pos = 0;
        }
        None
    }
}

/// Enumerates the subspaces of `F_p^n` under the global budget.
pub fn enumerate_subspaces(
    ambient_dim: usize,
    field: FieldSpec,
    dim_filter: Option<usize>,
) -> Result<SubspaceStream> {
    enumerate_subspaces_with(ambient_dim, field, dim_filter, &budget())
}

pub fn enumerate_subspaces_with(
    ambient_dim: usize,
    field: FieldSpec,
    dim_filter: Option<usize>,
    budget: &Budget,
) -> Result<SubspaceStream> {
    let p = field.modulus().ok_or(Error::UnsupportedEnumeration)?;
    let count = subspace_count(ambient_dim, p as u128, dim_filter);
    if count > budget.max_subspaces {
        return Err(Error::BudgetExceeded {
            count,
            bound: budget.max_subspaces,
        });
    }
    let dims: Vec<usize> = match dim_filter {
        Some(k) if k > ambient_dim => Vec::new(),
        Some(k) => vec![k],
        None => (0..=ambient_dim).collect(),
    };
    Ok(SubspaceStream {
        layers: dims.into_iter().map(|k| layer(p, ambient_dim, k)).collect(),
        layer: 0,
        pos: 0,
    })
}

/// Every vector of `F_p^n` in lexicographic order.
pub fn all_vectors(field: FieldSpec, n: usize) -> Result<Vec<Vec<Scalar>>> {
    let p = field.modulus().ok_or(Error::UnsupportedEnumeration)?;
    let total = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > budget().max_subspaces {
        return Err(Error::BudgetExceeded {
            count: total,
            bound: budget().max_subspaces,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0u32; n];
    loop {
        out.push(digits.iter().map(|&d| Scalar::Residue(d)).collect());
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let f2 = FieldSpec::Prime(2);
        assert_eq!(enumerate_subspaces(2, f2, None).unwrap().count(), 5);
        assert_eq!(enumerate_subspaces(3, f2, Some(1)).unwrap().count(), 7);
        let zero: Vec<_> = enumerate_subspaces(3, f2, Some(0)).unwrap().collect();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].is_zero());
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(6, 3, 2), 1395);
    }

    #[test]
    fn sorted_and_distinct() {
        let all: Vec<_> = enumerate_subspaces(4, FieldSpec::Prime(3), None).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rationals_refused() {
        assert!(matches!(
            enumerate_subspaces(2, FieldSpec::Rationals, None),
            Err(Error::UnsupportedEnumeration)
        ));
    }

    #[test]
    fn budget_error_names_bound() {
        let b = Budget {
            max_subspaces: 10,
            ..Budget::default()
        };
        match enumerate_subspaces_with(3, FieldSpec::Prime(2), None, &b) {
            Err(Error::BudgetExceeded { count, bound }) => {
                assert_eq!(count, 16);
                assert_eq!(bound, 10);
            }
            _ => panic!("expected budget error"),
        }
    }
}
