use liesolv::chief::*;
use liesolv::liealg::catalog;
use liesolv::series::{maximal_spaces, nilpotent_length};
use liesolv::{FieldSpec, LieAlgebra, Subspace};

fn cat(name: &str) -> LieAlgebra {
    catalog(name, None).unwrap()
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
fn minimal_ideal_examples() {
    let t2 = cat("T2");
    assert_eq!(minimal_ideals(&t2).unwrap(), vec![e(&t2, &[1])]);
    let ab = LieAlgebra::abelian(FieldSpec::Prime(2), 2);
    assert_eq!(minimal_ideals(&ab).unwrap().len(), 3);
    let ext3 = catalog("EXT3", Some(FieldSpec::Prime(3))).unwrap();
    assert_eq!(minimal_ideals(&ext3).unwrap(), vec![e(&ext3, &[2])]);
}

#[test]
fn chief_series_examples() {
    let t2 = cat("T2");
    let cs = chief_series(&t2, None).unwrap();
    assert_eq!(cs.chain, vec![t2.zero(), e(&t2, &[1]), t2.full()]);
    assert_eq!(cs.complemented, vec![true, true]);
    assert_eq!(cs.c_count, 2);

    let ext3 = catalog("EXT3", Some(FieldSpec::Prime(3))).unwrap();
    let cs = chief_series(&ext3, None).unwrap();
    assert_eq!(cs.chain, vec![ext3.zero(), e(&ext3, &[2]), e(&ext3, &[1, 2]), ext3.full()]);
    assert_eq!(cs.complemented, vec![false, true, true]);
    assert_eq!(cs.c_count, nilpotent_length(&ext3).unwrap());

    let h3 = cat("H3");
    let cs = chief_series(&h3, None).unwrap();
    assert_eq!(cs.c_count, 2);
    assert!(!cs.complemented[0]);
}

#[test]
fn complement_witnesses_are_listed_maximals() {
    let l = cat("X5");
    let maxes = maximal_spaces(&l).unwrap();
    for seed in 0..5 {
        let cs = chief_series(&l, Some(seed)).unwrap();
        for w in cs.complements.iter().flatten() {
            assert!(maxes.contains(w.space()));
        }
    }
}

#[test]
fn exp_ad_examples() {
    let t2 = cat("T2");
    let f = t2.field();
    let y = vec![f.zero(), f.one()];
    let g = exp_ad(&t2, &y).unwrap();
    // x -> x - y, y -> y
    assert_eq!(g.column(0), vec![f.one(), f.from_i64(-1)]);
    assert_eq!(g.column(1), y);
    let h3 = cat("H3");
    let z = vec![h3.field().zero(), h3.field().zero(), h3.field().one()];
    assert_eq!(exp_ad(&h3, &z).unwrap(), liesolv::Matrix::identity(h3.field(), 3));
    let autos = inner_automorphisms(&h3).unwrap();
    for g in &autos.generators {
        assert!(is_automorphism(&h3, g));
        let id = liesolv::Matrix::identity(h3.field(), 3);
        assert!(g.sub(&id).is_nilpotent());
    }
}

#[test]
fn conjugacy_examples() {
    let t2 = cat("T2");
    let maxes = maximal_spaces(&t2).unwrap();
    let cc = conjugacy_classes(&t2, &maxes).unwrap();
    assert_eq!(cc.m_count, 2);
    let ab = LieAlgebra::abelian(FieldSpec::Prime(3), 2);
    let maxes = maximal_spaces(&ab).unwrap();
    assert_eq!(conjugacy_classes(&ab, &maxes).unwrap().m_count, maxes.len());
    let ext3 = catalog("EXT3", Some(FieldSpec::Prime(3))).unwrap();
    assert_eq!(maximal_class_count(&ext3).unwrap(), 2);
}

#[test]
fn primitivity_examples() {
    let t2 = cat("T2");
    let p = primitivity(&t2).unwrap();
    assert!(p.is_primitive);
    assert_eq!(p.core_free_maximal, Some(e(&t2, &[0])));
    assert_eq!(p.monolith, Some(e(&t2, &[1])));
    let h3 = cat("H3");
    assert!(!primitivity(&h3).unwrap().is_primitive);
    let ext3 = catalog("EXT3", Some(FieldSpec::Prime(3))).unwrap();
    let p = primitivity(&ext3).unwrap();
    assert!(!p.is_primitive);
    assert_eq!(p.monolith, Some(e(&ext3, &[2])));
}

#[test]
fn chief_factor_predicate() {
    let l = LieAlgebra::abelian(FieldSpec::Prime(2), 2);
    assert!(!is_chief_factor(&l, &l.full(), &l.zero()).unwrap());
    let ext3 = cat("EXT3");
    assert!(!is_chief_factor(&ext3, &e(&ext3, &[1, 2]), &ext3.zero()).unwrap());
    assert!(is_chief_factor(&ext3, &e(&ext3, &[1, 2]), &e(&ext3, &[2])).unwrap());
}
