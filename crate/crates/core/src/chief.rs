//! Minimal ideals, chief series, inner automorphisms and conjugacy of
//! maximal subalgebras.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{all_vectors, budget, enumerate_subspaces, FieldSpec, Matrix, Subspace, Vector};
use crate::liealg::{LieAlgebra, Subalgebra};
use crate::series::{maximal_spaces, nilradical};

/// Every minimal ideal of `L`, sorted.
///
/// Over `F_p` a minimal ideal is `I(v)` for any nonzero `v` in it, so these
/// are the minimal members among the principal closures. Over `Q` only the
/// case of a one-dimensional `Z(N(L))` is decided.
pub fn minimal_ideals(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    if l.dim() == 0 {
        return Ok(Vec::new());
    }
    if !l.field().is_prime_field() {
        return minimal_ideals_rational(l);
    }
    budget().check_dim(l.field(), l.dim())?;
    let mut closures: Vec<Subspace> = Vec::new();
    for line in enumerate_subspaces(l.dim(), l.field(), Some(1))? {
        let c = l.ideal_closure(&line);
        if !closures.contains(&c) {
            closures.push(c);
        }
    }
    let mut out: Vec<Subspace> = closures
        .iter()
        .filter(|c| !closures.iter().any(|d| d.dim() < c.dim() && d.is_subspace_of(c)))
        .cloned()
        .collect();
    out.sort();
    for a in &out {
        if !l.product(a, a).is_zero() {
            return Err(Error::TheoremViolation("nonabelian minimal ideal in a solvable algebra".into()));
        }
    }
    Ok(out)
}

fn minimal_ideals_rational(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    // Every minimal ideal is central in N(L).
    let n = nilradical(l)?;
    let nil = l.subalgebra(&n)?;
    let z = n.lift(&nil.induced().center());
    if z.dim() == 1 {
        Ok(vec![z])
    } else {
        Err(Error::UnsupportedOverRationals("minimal_ideals"))
    }
}

/// Whether `A/B` is a chief factor: `B ⊂ A` ideals with nothing between.
pub fn is_chief_factor(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> Result<bool> {
    if !b.is_subspace_of(a) || a == b || !l.is_ideal(a) || !l.is_ideal(b) {
        return Ok(false);
    }
    if a.dim() - b.dim() == 1 {
        return Ok(true);
    }
    if !l.field().is_prime_field() {
        return Err(Error::UnsupportedOverRationals("is_chief_factor"));
    }
    let q = l.quotient(b)?;
    let image = q.image(a);
    let lq = q.quotient();
    for line in enumerate_subspaces(image.dim(), l.field(), Some(1))? {
        let v = image.combine(line.row(0));
        let seed = Subspace::span(l.field(), lq.dim(), &[v]);
        if lq.ideal_closure(&seed) != image {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A chief series with complement witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefSeries {
    /// `0 = A_0 ⊂ A_1 ⊂ … ⊂ A_m = L`
    pub chain: Vec<Subspace>,
    /// `complemented[i]` refers to the factor `A_{i+1}/A_i`.
    pub complemented: Vec<bool>,
    #[serde(skip)]
    pub complements: Vec<Option<Subalgebra>>,
    pub c_count: usize,
}

impl ChiefSeries {
    pub fn factor_dims(&self) -> Vec<usize> {
        self.chain.windows(2).map(|w| w[1].dim() - w[0].dim()).collect()
    }
}

/// A maximal `M` with `A + M = L` and `A ∩ M = B`, if any.
pub fn complement_of(maximals: &[Subspace], a: &Subspace, b: &Subspace) -> Option<Subspace> {
    maximals
        .iter()
        .find(|m| b.is_subspace_of(m) && a.join(m).is_full() && a.meet(m) == *b)
        .cloned()
}

/// Chief series through lexicographically least minimal ideals, or through
/// seeded random ones.
pub fn chief_series(l: &LieAlgebra, seed: Option<u64>) -> Result<ChiefSeries> {
    let maximals = maximal_spaces(l)?;
    chief_series_with(l, seed, &maximals)
}

pub fn chief_series_with(l: &LieAlgebra, seed: Option<u64>, maximals: &[Subspace]) -> Result<ChiefSeries> {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut chain = vec![l.zero()];
    while !chain.last().expect("nonempty").is_full() {
        let q = l.quotient(chain.last().expect("nonempty"))?;
        let mins = minimal_ideals(q.quotient())?;
        let pick = match rng.as_mut() {
            Some(r) => r.random_range(0..mins.len()),
            None => 0,
        };
        chain.push(q.pullback(&mins[pick]));
    }
    let mut complemented = Vec::new();
    let mut complements = Vec::new();
    for w in chain.windows(2) {
        let m = complement_of(maximals, &w[1], &w[0]);
        complemented.push(m.is_some());
        complements.push(m.map(|s| l.subalgebra(&s)).transpose()?);
    }
    let c_count = complemented.iter().filter(|&&c| c).count();
    Ok(ChiefSeries {
        chain,
        complemented,
        complements,
        c_count,
    })
}

/// `c(L)`, the number of complemented factors in a chief series.
pub fn complemented_count(l: &LieAlgebra) -> Result<usize> {
    Ok(chief_series(l, None)?.c_count)
}

/// Generators `exp(ad x)` of the inner automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerAutomorphismSet {
    pub generators: Vec<Matrix>,
    pub source_elements: Vec<Vector>,
}

/// `Σ_{r<k} (ad x)^r / r!`, or `None` when a needed `r!` is not invertible.
pub fn exp_ad(l: &LieAlgebra, x: &[crate::exactlin::Scalar]) -> Option<Matrix> {
    let f = l.field();
    let ad = l.ad(x);
    let n = l.dim();
    let mut out = Matrix::identity(f, n);
    let mut power = Matrix::identity(f, n);
    let mut fact = f.one();
    for r in 1..=n {
        power = power.mul(&ad);
        if power.is_zero() {
            return Some(out);
        }
        fact = f.mul(&fact, &f.from_i64(r as i64));
        let inv = f.inv(&fact)?;
        out = out.add(&power.scale(&inv));
    }
    power.mul(&ad).is_zero().then_some(out)
}

/// Whether `g` preserves brackets, `g[e_i,e_j] = [g e_i, g e_j]`.
pub fn is_automorphism(l: &LieAlgebra, g: &Matrix) -> bool {
    if g.inverse().is_none() {
        return false;
    }
    let n = l.dim();
    let cols: Vec<Vector> = (0..n).map(|j| g.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if g.mul_vec(l.basis_bracket(i, j)) != l.br(&cols[i], &cols[j]) {
                return false;
            }
        }
    }
    true
}

/// Over `F_p`, every `x` whose ideal closure is nilpotent of class `< p`;
/// over `Q`, a basis of `N(L)`. Each exponential is checked to be an
/// automorphism; identity maps and duplicates are dropped.
pub fn inner_automorphisms(l: &LieAlgebra) -> Result<InnerAutomorphismSet> {
    let f = l.field();
    let n = l.dim();
    let candidates: Vec<Vector> = match f {
        FieldSpec::Rationals => nilradical(l)?.vectors(),
        FieldSpec::Prime(p) => {
            budget().check_dim(f, n)?;
            let nil = nilradical(l)?;
            all_vectors(f, n)?
                .into_iter()
                .filter(|x| nil.contains_vector(x))
                .filter(|x| {
                    let i = l.ideal_closure(&Subspace::span(f, n, std::slice::from_ref(x)));
                    l.subalgebra_class(&i).is_some_and(|c| c < p as usize)
                })
                .collect()
        }
    };
    let id = Matrix::identity(f, n);
    let mut generators = Vec::new();
    let mut source_elements = Vec::new();
    for x in candidates {
        let Some(g) = exp_ad(l, &x) else { continue };
        if g == id || generators.contains(&g) {
            continue;
        }
        if !is_automorphism(l, &g) {
            continue;
        }
        generators.push(g);
        source_elements.push(x);
    }
    Ok(InnerAutomorphismSet {
        generators,
        source_elements,
    })
}

/// Orbits of a set of subspaces under the inner automorphism generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClasses {
    /// Indices into the target list, each class sorted, classes by first index.
    pub classes: Vec<Vec<usize>>,
    pub m_count: usize,
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = i;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

pub fn conjugacy_classes(l: &LieAlgebra, targets: &[Subspace]) -> Result<ConjugacyClasses> {
    if !l.field().is_prime_field() {
        return Err(Error::UnsupportedOverRationals("conjugacy_classes"));
    }
    let autos = inner_automorphisms(l)?;
    conjugacy_classes_with(targets, &autos)
}

pub fn conjugacy_classes_with(targets: &[Subspace], autos: &InnerAutomorphismSet) -> Result<ConjugacyClasses> {
    let index: HashMap<&Subspace, usize> = targets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut parent: Vec<usize> = (0..targets.len()).collect();
    for (i, s) in targets.iter().enumerate() {
        for g in &autos.generators {
            let img = s.image(g);
            let Some(&j) = index.get(&img) else {
                return Err(Error::TheoremViolation(
                    "automorphism image left the target set".into(),
                ));
            };
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for i in 0..targets.len() {
        let r = find(&mut parent, i);
        let k = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(i);
    }
    Ok(ConjugacyClasses {
        m_count: groups.len(),
        classes: groups,
    })
}

/// `m(L)`, the number of conjugacy classes of maximal subalgebras.
pub fn maximal_class_count(l: &LieAlgebra) -> Result<usize> {
    Ok(conjugacy_classes(l, &maximal_spaces(l)?)?.m_count)
}

/// Primitivity data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Primitivity {
    pub is_primitive: bool,
    pub core_free_maximal: Option<Subspace>,
    pub monolith: Option<Subspace>,
    /// Sum of the minimal ideals, all abelian here.
    pub abelian_socle: Subspace,
}

pub fn primitivity(l: &LieAlgebra) -> Result<Primitivity> {
    let maximals = maximal_spaces(l)?;
    let core_free_maximal = maximals.iter().find(|m| l.core(m).is_zero()).cloned();
    let mins = minimal_ideals(l)?;
    let abelian_socle = mins.iter().fold(l.zero(), |acc, a| acc.join(a));
    let monolith = (mins.len() == 1).then(|| mins[0].clone());
    if core_free_maximal.is_some() {
        let Some(a) = &monolith else {
            return Err(Error::TheoremViolation("primitive algebra without a monolith".into()));
        };
        if l.centralizer(a, &l.zero())? != *a {
            return Err(Error::TheoremViolation("monolith is not self-centralising".into()));
        }
    }
    Ok(Primitivity {
        is_primitive: core_free_maximal.is_some(),
        core_free_maximal,
        monolith,
        abelian_socle,
    })
}
