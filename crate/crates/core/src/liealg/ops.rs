use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{unit_vector, Matrix, SpanBuilder, Subspace, Vector};

/// A bracket-closed subspace together with the algebra it carries.
///
/// The induced algebra uses the canonical basis rows of `space`, so a
/// coordinate vector `c` of the induced algebra stands for `space.combine(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    space: Subspace,
    induced: LieAlgebra,
}

impl Subalgebra {
    pub fn new(l: &LieAlgebra, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != l.dim() {
            return Err(Error::AmbientMismatch);
        }
        if !l.is_subalgebra(&space) {
            return Err(Error::NotASubalgebra);
        }
        Ok(Self::new_unchecked(l, space))
    }

    pub(crate) fn new_unchecked(l: &LieAlgebra, space: Subspace) -> Self {
        let d = space.dim();
        let mut table = Vec::with_capacity(d * d);
        for r in 0..d {
            for s in 0..d {
                let v = l.br(space.row(r), space.row(s));
                table.push(space.coordinates(&v).expect("closed under bracket"));
            }
        }
        let induced = LieAlgebra::from_table_unchecked(l.field(), d, table);
        Subalgebra { space, induced }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn induced(&self) -> &LieAlgebra {
        &self.induced
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Subspace of the induced algebra, mapped into the parent.
    pub fn lift(&self, inner: &Subspace) -> Subspace {
        self.space.lift(inner)
    }

    /// Parent subspace inside `space`, in induced coordinates.
    pub fn restrict(&self, outer: &Subspace) -> Option<Subspace> {
        self.space.restrict(outer)
    }
}

/// Output of [`LieAlgebra::ideal_tests`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTests {
    pub is_subalgebra: bool,
    pub is_ideal: bool,
    pub idealizer: Subspace,
    pub is_subideal: bool,
    /// `U, N_L(U), N_L(N_L(U)), ...` until it stabilises.
    pub subideal_chain: Vec<Subspace>,
}

impl LieAlgebra {
    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        (0..u.dim()).all(|a| (a + 1..u.dim()).all(|b| u.contains_vector(&self.br(u.row(a), u.row(b)))))
    }

    pub fn is_ideal(&self, u: &Subspace) -> bool {
        if u.is_full() {
            return true;
        }
        (0..u.dim()).all(|a| (0..self.dim()).all(|j| u.contains_vector(&self.br(u.row(a), &self.e(j)))))
    }

    pub(crate) fn e(&self, j: usize) -> Vector {
        unit_vector(self.field(), self.dim(), j)
    }

    /// `{x : [x, U] ⊆ B}`, without assuming `B ⊆ U`.
    pub fn transporter(&self, u: &Subspace, b: &Subspace) -> Subspace {
        let f = self.field();
        let n = self.dim();
        if b.is_full() || u.is_zero() {
            return self.full();
        }
        let ann = b.basis().kernel();
        let mut rows: Vec<Vector> = Vec::new();
        for a in 0..u.dim() {
            let images: Vec<Vector> = (0..n).map(|j| self.br(&self.e(j), u.row(a))).collect();
            for fv in ann.vectors() {
                rows.push(
                    images
                        .iter()
                        .map(|w| w.iter().zip(&fv).fold(f.zero(), |acc, (x, y)| f.mul_add(&acc, x, y)))
                        .collect(),
                );
            }
        }
        Matrix::from_rows(f, rows, n).expect("well-formed").kernel()
    }

    /// `C_L(U/B) = {x : [x, U] ⊆ B}`; requires `B ⊆ U`.
    pub fn centralizer(&self, u: &Subspace, b: &Subspace) -> Result<Subspace> {
        if u.ambient_dim() != self.dim() || b.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch);
        }
        if !b.is_subspace_of(u) {
            return Err(Error::NotContained("B"));
        }
        Ok(self.transporter(u, b))
    }

    pub fn center(&self) -> Subspace {
        self.transporter(&self.full(), &self.zero())
    }

    /// `{x : [x, U] ⊆ U}`
    pub fn idealizer(&self, u: &Subspace) -> Subspace {
        self.transporter(u, u)
    }

    /// Smallest subalgebra containing `seed`.
    pub fn subalgebra_closure(&self, seed: &Subspace) -> Subalgebra {
        let mut b = SpanBuilder::from_subspace(seed);
        let mut gens = seed.vectors();
        let mut frontier = 0;
        // every new vector is bracketed with all earlier ones
        while frontier < gens.len() {
            let x = gens[frontier].clone();
            for y in gens[..frontier].to_vec() {
                if let Some(w) = b.insert(&self.br(&y, &x)) {
                    gens.push(w);
                }
            }
            frontier += 1;
        }
        Subalgebra::new_unchecked(self, b.finish())
    }

    /// Smallest ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let n = self.dim();
        let mut b = SpanBuilder::from_subspace(seed);
        let mut gens = seed.vectors();
        let mut frontier = 0;
        while frontier < gens.len() && b.dim() < n {
            let x = gens[frontier].clone();
            for j in 0..n {
                if let Some(w) = b.insert(&self.br(&self.e(j), &x)) {
                    gens.push(w);
                }
            }
            frontier += 1;
        }
        b.finish()
    }

    pub fn ideal_tests(&self, u: &Subspace) -> IdealTests {
        let is_subalgebra = self.is_subalgebra(u);
        let is_ideal = self.is_ideal(u);
        let idealizer = self.idealizer(u);
        let mut chain = vec![u.clone()];
        loop {
            let last = chain.last().expect("nonempty");
            let next = self.idealizer(last);
            if &next == last {
                break;
            }
            chain.push(next);
        }
        let is_subideal = chain.last().expect("nonempty").is_full();
        IdealTests {
            is_subalgebra,
            is_ideal,
            idealizer,
            is_subideal,
            subideal_chain: chain,
        }
    }

    /// Largest ideal of `L` inside `U`.
    pub fn core(&self, u: &Subspace) -> Subspace {
        let full = self.full();
        let mut cur = u.clone();
        loop {
            let next = cur.meet(&self.transporter(&full, &cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Induced algebra on an ideal or subalgebra given by its space.
    pub fn subalgebra(&self, u: &Subspace) -> Result<Subalgebra> {
        Subalgebra::new(self, u.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::liealg::StructureConstants;

    fn t2(f: FieldSpec) -> LieAlgebra {
        let mut sc = StructureConstants::new(f, 2);
        sc.set_int(0, 1, &[(1, 1)]);
        sc.validate().unwrap()
    }

    #[test]
    fn t2_line_x() {
        let f = FieldSpec::Prime(3);
        let l = t2(f);
        let x = Subspace::span(f, 2, &[l.e(0)]);
        let t = l.ideal_tests(&x);
        assert!(t.is_subalgebra);
        assert!(!t.is_ideal);
        assert_eq!(t.idealizer, x);
        assert!(!t.is_subideal);
        assert!(l.core(&x).is_zero());
        assert_eq!(l.subalgebra_closure(&x).space(), &x);
    }

    #[test]
    fn whole_algebra_is_subideal() {
        let l = t2(FieldSpec::Rationals);
        let t = l.ideal_tests(&l.full());
        assert!(t.is_ideal && t.is_subideal);
        assert_eq!(t.subideal_chain, vec![l.full()]);
    }
}
