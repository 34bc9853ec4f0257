use liesolv::liealg::catalog;
use liesolv::series::*;
use liesolv::{FieldSpec, LieAlgebra, Subspace};

fn cat(name: &str) -> LieAlgebra {
    catalog(name, None).unwrap()
}

fn span(l: &LieAlgebra, rows: &[&[i64]]) -> Subspace {
    let f = l.field();
    let vs: Vec<_> = rows.iter().map(|r| r.iter().map(|&c| f.from_i64(c)).collect()).collect();
    Subspace::span(f, l.dim(), &vs)
}

fn e(l: &LieAlgebra, idx: &[usize]) -> Subspace {
    let f = l.field();
    let vs: Vec<_> = idx
        .iter()
        .map(|&i| (0..l.dim()).map(|k| f.from_i64((k == i) as i64)).collect())
        .collect();
    Subspace::span(f, l.dim(), &vs)
}

#[test]
fn ex1_upper_and_lower() {
    let l = cat("EX1");
    let up = upper_nilpotent_series(&l).unwrap();
    assert_eq!(up, vec![l.zero(), e(&l, &[1, 2, 3]), l.full()]);
    let low = lower_series(&l);
    assert_eq!(low.lower_nilpotent, vec![l.full(), e(&l, &[2, 3]), l.zero()]);
    assert_eq!(low.derived, vec![l.full(), e(&l, &[2, 3]), l.zero()]);
    assert_eq!(l.derived_length(), 2);
}

#[test]
fn exp2_nilradical_and_frattini() {
    let l = cat("EXP2");
    assert_eq!(nilradical(&l).unwrap(), e(&l, &[0, 1, 3]));
    assert_eq!(frattini(&l).unwrap(), e(&l, &[0]));
}

#[test]
fn ut2_nilradical_matches_enumeration() {
    let l = catalog("UT2", Some(FieldSpec::Prime(3))).unwrap();
    let n = nilradical(&l).unwrap();
    assert_eq!(n, span(&l, &[&[0, 1, 0], &[1, 0, 1]]));
    assert_eq!(n, nilradical_by_enumeration(&l).unwrap());
}

#[test]
fn t2_series_and_maximals() {
    let l = cat("T2");
    let low = lower_series(&l);
    assert_eq!(low.derived, vec![l.full(), e(&l, &[1]), l.zero()]);
    assert_eq!(low.nilpotent_residual, e(&l, &[1]));
    let ms = maximal_subalgebras(&l).unwrap();
    assert_eq!(ms.maximals.len(), 3);
    assert!(ms.frattini.is_zero());
    assert_eq!(compatibility_index(&l, &e(&l, &[0])).unwrap(), 0);
    assert_eq!(compatibility_index(&l, &l.full()).unwrap(), 2);
}

#[test]
fn ext3_frattini_series() {
    let l = cat("EXT3");
    assert_eq!(frattini(&l).unwrap(), e(&l, &[2]));
    assert_eq!(nilradical(&l).unwrap(), e(&l, &[1, 2]));
    assert_eq!(frattini_series(&l).unwrap(), vec![e(&l, &[2]), e(&l, &[1, 2])]);
}

#[test]
fn h3_frattini_is_derived_algebra() {
    let l = cat("H3");
    let l2 = l.product_space(&l.full(), &l.full()).unwrap();
    assert_eq!(frattini(&l).unwrap(), l2);
    assert_eq!(intersect_all(&l, &maximal_spaces_ascending(&l).unwrap()), l2);
    assert_eq!(nilpotent_length(&l).unwrap(), 1);
}

#[test]
fn x5_maximals_and_cores() {
    let l = cat("X5");
    assert_eq!(nilradical(&l).unwrap(), e(&l, &[1, 2]));
    let inner = e(&l, &[1, 2, 3, 4]);
    let ms = maximal_subalgebras(&l).unwrap();
    let i = ms.spaces().iter().position(|t| *t == inner).expect("EXP2 is maximal");
    assert_eq!(ms.compatibility[i], 1);
    let m = e(&l, &[0, 1, 2]);
    assert_eq!(l.core(&m), e(&l, &[1, 2]));
    // <d,x1,x2> sits inside the subalgebra <d,x1,x2,x3>
    let above = e(&l, &[0, 1, 2, 3]);
    assert!(l.is_subalgebra(&above) && m.is_subspace_of(&above));
    assert!(!ms.spaces().contains(&m));
}

#[test]
fn abelian_frattini_is_zero() {
    let l = LieAlgebra::abelian(FieldSpec::Prime(2), 3);
    assert!(frattini(&l).unwrap().is_zero());
    assert_eq!(upper_nilpotent_series(&l).unwrap(), vec![l.zero(), l.full()]);
}

#[test]
fn nilregularity_examples() {
    let q = cat("EX1");
    let u = q.subalgebra(&q.full()).unwrap();
    let r = nilregularity(&q, &u).unwrap();
    assert!(r.nilregular && r.strongly_nilregular);
    for (p, expect) in [(2, false), (5, true)] {
        let l = LieAlgebra::abelian(FieldSpec::Prime(p), 2);
        let u = l.subalgebra(&l.full()).unwrap();
        assert_eq!(nilregularity(&l, &u).unwrap().nilregular, expect);
    }
}

#[test]
fn maximals_over_q_refused() {
    assert!(maximal_subalgebras(&cat("EX1")).is_err());
}
