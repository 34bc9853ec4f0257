//! Acceptance criteria, one line each.
//!
//! Criteria 3, 4 and 5 fail on the literal claims (see README). The binary
//! exits non-zero when the failing set differs from that list, so a new
//! regression or an unexpected fix both show up.

use std::time::{Duration, Instant};

use liesolv::chief::is_chief_factor;
use liesolv::classify::{extreme_by_definition, is_minimal_non_n, structure_flags, subalgebra_length};
use liesolv::harness::{run_suite, SuiteConfig, SuiteReport};
use liesolv::liealg::{catalog, exp2_derivation, Derivation};
use liesolv::series::{
    compatibility_index, frattini, lower_series, maximal_spaces, nilpotent_length, nilradical, upper_nilpotent_series,
};
use liesolv::{FieldSpec, LieAlgebra, Subspace};

const KNOWN_FAILURES: &[u32] = &[3, 4, 5];

struct Check {
    notes: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { notes: vec![] }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, actual: T) {
        if expected != actual {
            self.notes.push(format!("{what}: expected {expected:?}, got {actual:?}"));
        }
    }

    fn that(&mut self, what: &str, ok: bool) {
        if !ok {
            self.notes.push(what.to_string());
        }
    }
}

fn e(l: &LieAlgebra, idx: &[usize]) -> Subspace {
    let f = l.field();
    let vs: Vec<_> = idx
        .iter()
        .map(|&i| (0..l.dim()).map(|k| f.from_i64((k == i) as i64)).collect())
        .collect();
    Subspace::span(f, l.dim(), &vs)
}

fn c1(c: &mut Check) {
    let l = catalog("EX1", None).unwrap();
    c.eq("field", FieldSpec::Rationals, l.field());
    let up = upper_nilpotent_series(&l).unwrap();
    let low = lower_series(&l).lower_nilpotent;
    c.eq("N_1", e(&l, &[1, 2, 3]), up[1].clone());
    c.eq("N_2", l.full(), up[2].clone());
    c.eq("Γ_1", e(&l, &[2, 3]), low[1].clone());
    c.eq("Γ_2", l.zero(), low[2].clone());
    c.eq("n(L)", 2, up.len() - 1);
    c.that("N_1 differs from Γ_1", up[1] != low[1]);
}

fn c2(c: &mut Check) {
    let f = FieldSpec::Prime(2);
    let l = catalog("EXP2", None).unwrap();
    let nil = nilradical(&l).unwrap();
    c.eq("N(L)", e(&l, &[0, 1, 3]), nil.clone());
    c.eq("φ(L)", e(&l, &[0]), frattini(&l).unwrap());
    let d = Derivation::new(&l, exp2_derivation(f));
    c.that("D validates as a derivation", d.is_ok());
    let dn = nil.image(&exp2_derivation(f));
    c.eq("D(N(L))", e(&l, &[1, 2]), dn.clone());
    c.that("D(N(L)) ⊄ N(L)", !dn.is_subspace_of(&nil));
    c.that("N(L) not characteristic", !l.is_characteristic(&nil));
    let x = catalog("X5", None).unwrap();
    c.that("L ideal in X5", x.is_ideal(&e(&x, &[1, 2, 3, 4])));
    c.that("N(L) not an ideal of X5", !x.is_ideal(&e(&x, &[1, 2, 4])));
}

fn c3(c: &mut Check) {
    let x = catalog("X5", None).unwrap();
    let maximals = maximal_spaces(&x).unwrap();
    let m = e(&x, &[0, 1, 2]);
    let l = e(&x, &[1, 2, 3, 4]);
    c.that("M = ⟨d,x1,x2⟩ maximal", maximals.contains(&m));
    c.that("L maximal", maximals.contains(&l));
    c.eq("compatibility index of M", 1, compatibility_index(&x, &m).unwrap());
    c.eq("compatibility index of L", 1, compatibility_index(&x, &l).unwrap());
    let nil = nilradical(&x).unwrap();
    c.eq("N(X5)", e(&x, &[1, 2]), nil.clone());
    c.eq("M_X", e(&x, &[1, 2]), x.core(&m));
    let sub = x.subalgebra(&l).unwrap();
    let nl = l.lift(&nilradical(sub.induced()).unwrap());
    c.that("conclusion N_1(L) = N_1(X5) fails at L", nl != nil);
}

fn c4(c: &mut Check) {
    for p in [2u32, 3, 5] {
        for a in 1..p as i64 {
            let l = catalog(&format!("SUP({p},{a})"), None).unwrap();
            let tag = format!("SUP({p},{a})");
            c.that(&format!("{tag} supersolvable"), structure_flags(&l).unwrap().supersolvable == Some(true));
            c.that(&format!("{tag} extreme"), extreme_by_definition(&l).unwrap().0);
            let phi = frattini(&l).unwrap();
            c.eq(&format!("{tag} dim φ"), 1, phi.dim());
            let q = l.quotient(&phi).unwrap();
            c.that(
                &format!("{tag} L/φ 2-dim nonabelian"),
                q.quotient().dim() == 2 && !q.quotient().is_abelian(),
            );
        }
    }
    let l = catalog("EXT3", None).unwrap();
    c.eq("EXT3 field", FieldSpec::Prime(3), l.field());
    c.that("EXT3 extreme", extreme_by_definition(&l).unwrap().0);
    c.eq("EXT3 φ", e(&l, &[2]), frattini(&l).unwrap());
    c.eq("EXT3 N", e(&l, &[1, 2]), nilradical(&l).unwrap());
    c.that("EXT3 not minimal non-N", !is_minimal_non_n(&l).unwrap().flag);
    let w = e(&l, &[0, 2]);
    c.that("⟨x,z⟩ maximal", maximal_spaces(&l).unwrap().contains(&w));
    c.eq("n(⟨x,z⟩)", 2, subalgebra_length(&l, &w).unwrap());
    c.eq("n(EXT3)", 2, nilpotent_length(&l).unwrap());
}

fn suite(name: &str, trials: usize) -> SuiteReport {
    run_suite(&SuiteConfig::new(name).unwrap().with_trials(trials).with_seed(2024)).unwrap()
}

fn record_failures(c: &mut Check, r: &SuiteReport) {
    let fails: Vec<_> = r.failures().collect();
    if let Some(f) = fails.first() {
        let msg = f.witness.as_ref().map(|w| w.messages.join("; ")).unwrap_or_default();
        c.notes.push(format!("{}: {} failures, first {} {msg}", r.suite, fails.len(), f.source));
    }
}

fn c5(c: &mut Check) {
    let r = suite("thm-3.3", 200);
    let random = r.trials.iter().filter(|t| t.source == "random").count();
    let catalogued = r.trials.iter().filter(|t| t.source.starts_with("catalog:")).count();
    c.that("≥200 random algebras", random >= 200);
    c.that("catalog included", catalogued >= 10);
    record_failures(c, &r);
}

fn c6(c: &mut Check) {
    for name in [
        "lemma-1.1",
        "lemma-2.2",
        "lemma-2.3",
        "lemma-2.4",
        "lemma-2.5",
        "prop-2.11",
        "prop-2.12",
        "prop-2.14",
        "prop-nmax-length",
    ] {
        let r = suite(name, 200);
        record_failures(c, &r);
        c.that(&format!("{name} non-vacuous ≥ 50 (got {})", r.totals.non_vacuous), r.totals.non_vacuous >= 50);
        println!(
            "    {name}: pass {} fail {} vacuous {} starved {}",
            r.totals.pass, r.totals.fail, r.totals.vacuous, r.totals.starved
        );
    }
}

fn c7(c: &mut Check) {
    for name in ["thm-2.17", "thm-3.5"] {
        let r = suite(name, 150);
        record_failures(c, &r);
        c.that(&format!("{name} ≥ 100 algebras"), r.totals.non_vacuous >= 100);
    }
}

fn c8(c: &mut Check) {
    for name in ["oracle-nilradical", "oracle-frattini", "oracle-chief"] {
        let r = suite(name, 120);
        record_failures(c, &r);
        c.that(&format!("{name} ≥ 100 algebras"), r.totals.non_vacuous >= 100);
    }
    // an independent check that each computed chief factor is chief
    let l = catalog("X5", None).unwrap();
    let cs = liesolv::chief::chief_series(&l, Some(1)).unwrap();
    for w in cs.chain.windows(2) {
        c.that("X5 chief factor", is_chief_factor(&l, &w[1], &w[0]).unwrap());
    }
}

fn c9(c: &mut Check) {
    for name in ["lemma-4.1", "thm-4.3", "cor-4.4", "cor-4.5", "cor-4.6", "thm-4.8", "thm-4.10", "thm-4.11"] {
        let r = suite(name, 60);
        record_failures(c, &r);
        let starved: Vec<_> = r.search.iter().filter(|s| s.starved).map(|s| s.predicate.clone()).collect();
        println!(
            "    {name}: pass {} fail {} vacuous {} starved {}{}",
            r.totals.pass,
            r.totals.fail,
            r.totals.vacuous,
            r.totals.starved,
            if starved.is_empty() { String::new() } else { format!(" (search starved: {})", starved.join(", ")) }
        );
        if name == "lemma-4.1" {
            let t2 = r.search[0].specimens.iter().any(|s| s.algebra.dim() == 2 && !s.algebra.is_abelian());
            c.that("a 2-dim nonabelian minimal non-N specimen found", t2);
        }
    }
}

fn c10(_: &mut Check) {}

fn main() {
    let criteria: [(u32, &str, u64, fn(&mut Check)); 10] = [
        (1, "EX1 series over Q", 1, c1),
        (2, "EXP2 nilradical not characteristic", 5, c2),
        (3, "X5 maximals and the nilregular hypothesis", 10, c3),
        (4, "SUP(p,alpha) and EXT3", 10, c4),
        (5, "extreme conditions agree", 300, c5),
        (6, "series suites", 600, c6),
        (7, "decomposition suites", 300, c7),
        (8, "oracle equivalences", 300, c8),
        (9, "minimal non-N suites on specimens", 900, c9),
        (10, "no large-scale experiments to reproduce", 1, c10),
    ];
    let mut failing = Vec::new();
    for (n, title, limit, f) in criteria {
        let mut c = Check::new();
        let t0 = Instant::now();
        f(&mut c);
        let el = t0.elapsed();
        if el > Duration::from_secs(limit) {
            c.notes.push(format!("took {:.1}s, limit {limit}s", el.as_secs_f64()));
        }
        let ok = c.notes.is_empty();
        println!("criterion {n:>2} {}: {title} ({:.2}s)", if ok { "PASS" } else { "FAIL" }, el.as_secs_f64());
        for note in &c.notes {
            println!("    {note}");
        }
        if !ok {
            failing.push(n);
        }
    }
    println!("failing criteria: {failing:?}; documented: {KNOWN_FAILURES:?}");
    if failing != KNOWN_FAILURES {
        eprintln!("acceptance outcome differs from the documented failures");
        std::process::exit(1);
    }
}
