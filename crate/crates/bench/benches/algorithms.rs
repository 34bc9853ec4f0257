use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liesolv::chief::{chief_series, maximal_class_count};
use liesolv::classify::{classify, decompose};
use liesolv::harness::{run_suite, SuiteConfig};
use liesolv::liealg::{catalog, random_solvable};
use liesolv::series::{maximal_spaces, maximal_spaces_ascending, nilradical, nilradical_by_enumeration, upper_nilpotent_series};
use liesolv::{FieldSpec, LieAlgebra};

fn samples() -> Vec<(String, LieAlgebra)> {
    let mut out = vec![
        ("EXT3".to_string(), catalog("EXT3", None).unwrap()),
        ("X5".to_string(), catalog("X5", None).unwrap()),
    ];
    for (p, d) in [(2, 5), (2, 6), (3, 4), (3, 5)] {
        let l = random_solvable(FieldSpec::Prime(p), d, 2, 17).unwrap();
        out.push((format!("F{p}-dim{d}"), l));
    }
    out
}

fn nilradicals(c: &mut Criterion) {
    let mut g = c.benchmark_group("nilradical");
    for (name, l) in samples() {
        g.bench_with_input(BenchmarkId::new("principal-ideals", &name), &l, |b, l| b.iter(|| nilradical(black_box(l))));
        g.bench_with_input(BenchmarkId::new("enumeration", &name), &l, |b, l| {
            b.iter(|| nilradical_by_enumeration(black_box(l)))
        });
    }
    g.finish();
}

fn maximals(c: &mut Criterion) {
    let mut g = c.benchmark_group("maximals");
    g.sample_size(10);
    for (name, l) in samples() {
        g.bench_with_input(BenchmarkId::new("descending", &name), &l, |b, l| b.iter(|| maximal_spaces(black_box(l))));
        g.bench_with_input(BenchmarkId::new("ascending", &name), &l, |b, l| {
            b.iter(|| maximal_spaces_ascending(black_box(l)))
        });
    }
    g.finish();
}

fn structure(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure");
    g.sample_size(10);
    for (name, l) in samples() {
        g.bench_with_input(BenchmarkId::new("upper-series", &name), &l, |b, l| {
            b.iter(|| upper_nilpotent_series(black_box(l)))
        });
        g.bench_with_input(BenchmarkId::new("chief", &name), &l, |b, l| b.iter(|| chief_series(black_box(l), None)));
        g.bench_with_input(BenchmarkId::new("m(L)", &name), &l, |b, l| b.iter(|| maximal_class_count(black_box(l))));
        g.bench_with_input(BenchmarkId::new("decompose", &name), &l, |b, l| b.iter(|| decompose(black_box(l))));
        g.bench_with_input(BenchmarkId::new("classify", &name), &l, |b, l| b.iter(|| classify(black_box(l))));
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    for name in ["lemma-1.1", "lemma-2.4", "thm-3.3", "oracle-chief"] {
        let cfg = SuiteConfig::new(name).unwrap().with_trials(20);
        g.bench_function(name, |b| b.iter(|| run_suite(black_box(&cfg)).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, nilradicals, maximals, structure, suites);
criterion_main!(benches);
