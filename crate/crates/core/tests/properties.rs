use liesolv::chief::conjugacy_classes;
use liesolv::exactlin::{enumerate_subspaces, Matrix};
use liesolv::liealg::format::{parse_algebra, to_canonical_json};
use liesolv::liealg::{is_derivation, random_solvable, semidirect};
use liesolv::series::{
    all_ideals, all_subalgebras, compatibility_index, maximal_spaces, nilpotent_length, upper_nilpotent_series,
};
use liesolv::{FieldSpec, LieAlgebra, Scalar, Subspace};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Prime(2)), Just(FieldSpec::Prime(3)), Just(FieldSpec::Prime(5))]
}

fn algebra(max_dim: usize) -> impl Strategy<Value = LieAlgebra> {
    (prop_oneof![Just(2u32), Just(3)], 2..=max_dim, 1usize..=3, any::<u64>())
        .prop_map(|(p, d, s, seed)| random_solvable(FieldSpec::Prime(p), d, s, seed).unwrap())
}

fn vector(f: FieldSpec, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    let m = f.modulus().unwrap() as i64;
    prop::collection::vec(0..m, n).prop_map(move |v| v.into_iter().map(|c| f.from_i64(c)).collect())
}

fn vectors(f: FieldSpec, n: usize, k: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(vector(f, n), 0..=k)
}

fn rational_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..5, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rref_is_idempotent(rows in rational_matrix()) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = Matrix::from_i64(FieldSpec::Rationals, &refs);
        let (r, piv) = m.rref();
        let (r2, piv2) = r.rref();
        prop_assert_eq!(r, r2);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn span_equality_is_value_equality((f, a, b) in field().prop_flat_map(|f| (Just(f), vectors(f, 4, 3), vectors(f, 4, 3)))) {
        let sa = Subspace::span(f, 4, &a);
        let sb = Subspace::span(f, 4, &b);
        let same = sa.is_subspace_of(&sb) && sb.is_subspace_of(&sa);
        prop_assert_eq!(same, sa == sb);
        let mut shuffled = a.clone();
        shuffled.reverse();
        prop_assert_eq!(Subspace::span(f, 4, &shuffled), sa);
    }

    #[test]
    fn modular_law((f, a, b) in field().prop_flat_map(|f| (Just(f), vectors(f, 5, 4), vectors(f, 5, 4)))) {
        let sa = Subspace::span(f, 5, &a);
        let sb = Subspace::span(f, 5, &b);
        prop_assert_eq!(sa.dim() + sb.dim(), sa.join(&sb).dim() + sa.meet(&sb).dim());
    }

    #[test]
    fn ad_is_a_derivation((l, x) in algebra(5).prop_flat_map(|l| { let v = vector(l.field(), l.dim()); (Just(l), v) })) {
        prop_assert!(is_derivation(&l, &l.ad(&x)));
    }

    #[test]
    fn quotient_section_round_trip(l in algebra(5), pick in any::<prop::sample::Index>(), y in any::<u64>()) {
        let ideals = all_ideals(&l).unwrap();
        let i = &ideals[pick.index(ideals.len())];
        let q = l.quotient(i).unwrap();
        let k = q.quotient().dim();
        let f = l.field();
        let v: Vec<Scalar> = (0..k).map(|t| f.from_i64(((y >> (3 * t)) & 7) as i64)).collect();
        prop_assert_eq!(q.project(&q.lift(&v)), v);
    }

    #[test]
    fn closure_is_idempotent_and_monotone((l, seeds) in algebra(5).prop_flat_map(|l| { let v = vectors(l.field(), l.dim(), 2); (Just(l), v) })) {
        let seed = Subspace::span(l.field(), l.dim(), &seeds);
        let c = l.subalgebra_closure(&seed);
        prop_assert!(seed.is_subspace_of(c.space()));
        prop_assert!(l.is_subalgebra(c.space()));
        let again = l.subalgebra_closure(c.space());
        prop_assert_eq!(again.space(), c.space());
        let ic = l.ideal_closure(&seed);
        prop_assert!(seed.is_subspace_of(&ic) && l.is_ideal(&ic));
        prop_assert_eq!(l.ideal_closure(&ic), ic);
    }

    #[test]
    fn core_is_largest_ideal_inside(l in algebra(4), pick in any::<prop::sample::Index>()) {
        let subs = all_subalgebras(&l).unwrap();
        let u = &subs[pick.index(subs.len())];
        let core = l.core(u);
        prop_assert!(l.is_ideal(&core));
        prop_assert!(core.is_subspace_of(u));
        for i in all_ideals(&l).unwrap() {
            if i.is_subspace_of(u) {
                prop_assert!(i.is_subspace_of(&core));
            }
        }
    }

    #[test]
    fn semidirect_with_adjoint_module(l in algebra(3)) {
        let n = l.dim();
        let rep: Vec<Matrix> = (0..n).map(|i| l.ad_basis(i)).collect();
        let x = semidirect(&l, &rep, n).unwrap();
        let f = l.field();
        let v_idx: Vec<_> = (n..2 * n)
            .map(|i| (0..2 * n).map(|k| f.from_i64((k == i) as i64)).collect())
            .collect();
        let v = Subspace::span(f, 2 * n, &v_idx);
        prop_assert!(x.is_ideal(&v));
        prop_assert!(x.product_space(&v, &v).unwrap().is_zero());
        let q = x.quotient(&v).unwrap();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(q.quotient().basis_bracket(i, j), l.basis_bracket(i, j));
            }
        }
    }

    #[test]
    fn subalgebras_are_no_longer(l in algebra(4), pick in any::<prop::sample::Index>()) {
        let subs = all_subalgebras(&l).unwrap();
        let u = &subs[pick.index(subs.len())];
        let n_u = nilpotent_length(l.subalgebra(u).unwrap().induced()).unwrap();
        prop_assert!(n_u <= nilpotent_length(&l).unwrap());
    }

    #[test]
    fn conjugate_maximals_share_invariants(l in algebra(4)) {
        let ms = maximal_spaces(&l).unwrap();
        let classes = conjugacy_classes(&l, &ms).unwrap();
        for class in &classes.classes {
            let m0 = &ms[class[0]];
            for &k in class {
                let m = &ms[k];
                prop_assert_eq!(m.dim(), m0.dim());
                prop_assert_eq!(l.core(m).dim(), l.core(m0).dim());
                prop_assert_eq!(compatibility_index(&l, m).unwrap(), compatibility_index(&l, m0).unwrap());
            }
        }
    }

    #[test]
    fn canonical_serialization_round_trips(l in algebra(5)) {
        let text = to_canonical_json(&l);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(to_canonical_json(&back), text);
    }
}

fn gl_order(k: u32, p: u128) -> u128 {
    (0..k).map(|i| p.pow(k) - p.pow(i)).product()
}

/// Number of rank-`k` `k × n` matrices over `F_p`, by brute force.
fn full_rank_count(k: usize, n: usize, p: u32) -> u128 {
    let f = FieldSpec::Prime(p);
    let cells = k * n;
    let total = (p as u64).pow(cells as u32);
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let rows: Vec<Vec<Scalar>> = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let v = (c % p as u64) as i64;
                        c /= p as u64;
                        f.from_i64(v)
                    })
                    .collect()
            })
            .collect();
        if Matrix::from_rows(f, rows, n).unwrap().rank() == k {
            count += 1;
        }
    }
    count
}

#[test]
fn enumeration_matches_rank_counting() {
    for p in [2u32, 3] {
        for n in 0..=4usize {
            for k in 0..=n {
                if (p as u64).pow((k * n) as u32) > 600_000 {
                    continue;
                }
                let by_rank = full_rank_count(k, n, p) / gl_order(k as u32, p as u128);
                let listed = enumerate_subspaces(n, FieldSpec::Prime(p), Some(k)).unwrap().count() as u128;
                assert_eq!(listed, by_rank, "p {p} n {n} k {k}");
            }
        }
    }
}

#[test]
fn random_solvable_spreads_over_lengths() {
    let mut lengths = [0usize; 5];
    for seed in 0..200 {
        let f = FieldSpec::Prime([2, 3][seed as usize % 2]);
        let d = 2 + (seed as usize % 4);
        let l = random_solvable(f, d, 1 + (seed as usize % 3), seed).unwrap();
        assert_eq!(l.dim(), d);
        assert_eq!(l.field(), f);
        let n = upper_nilpotent_series(&l).unwrap().len() - 1;
        lengths[n.min(4)] += 1;
    }
    assert!(lengths[1] > 0, "{lengths:?}");
    assert!(lengths[2] >= 20, "{lengths:?}");
    assert!(lengths[3] >= 10, "{lengths:?}");
}

#[test]
fn random_solvable_is_seeded() {
    let f = FieldSpec::Prime(3);
    let a = random_solvable(f, 5, 3, 99).unwrap();
    let b = random_solvable(f, 5, 3, 99).unwrap();
    assert_eq!(to_canonical_json(&a), to_canonical_json(&b));
    let c = random_solvable(f, 5, 3, 100).unwrap();
    assert_ne!(to_canonical_json(&a), to_canonical_json(&c));
}
