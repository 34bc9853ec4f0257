use liesolv::classify::{extreme_by_definition, is_minimal_non_n};
use liesolv::harness::*;
use liesolv::series::upper_nilpotent_series;
use liesolv::FieldSpec;

fn search(predicate: &str, fields: &[u32], dims: (usize, usize), count: usize) -> SearchReport {
    find_specimens(&SearchConfig {
        predicate: predicate.into(),
        fields: fields.iter().map(|&p| FieldSpec::Prime(p)).collect(),
        dims,
        seed: 11,
        attempts: 3000,
        count,
        cache_dir: None,
    })
    .unwrap()
}

#[test]
fn lemma_1_1_two_hundred_passes() {
    let cfg = SuiteConfig::new("lemma-1.1").unwrap().with_trials(200).with_seed(7);
    let r = run_suite(&cfg).unwrap();
    assert_eq!(r.totals.trials, 200);
    assert_eq!(r.totals.pass, 200);
    assert!(r.passed());
}

#[test]
fn thm_3_3_on_small_catalog() {
    let mut cfg = SuiteConfig::new("thm-3.3").unwrap().with_trials(1);
    cfg.catalog = ["T2", "EXT3", "SUP(3,1)", "SUP(3,2)"].map(String::from).to_vec();
    let r = run_suite(&cfg).unwrap();
    let cat: Vec<_> = r.trials.iter().filter(|t| t.source.starts_with("catalog:")).collect();
    assert_eq!(cat.len(), 4);
    for t in cat {
        assert_eq!(t.outcome, Outcome::Pass, "{}: {:?}", t.source, t.witness);
    }
}

#[test]
fn observation_suite_never_fails() {
    let cfg = SuiteConfig::new("char2-phifree").unwrap().with_trials(60).with_seed(3);
    let r = run_suite(&cfg).unwrap();
    assert!(r.observation);
    assert_eq!(r.totals.fail, 0);
    assert!(r.passed());
    let seen: usize = r.findings.iter().map(|f| f.1).sum();
    assert!(seen <= r.totals.trials);
}

#[test]
fn unknown_suite_and_bad_config() {
    assert!(SuiteConfig::new("lemma-9.9").is_err());
    let mut cfg = SuiteConfig::new("lemma-1.1").unwrap();
    cfg.fields = vec![FieldSpec::Rationals];
    assert!(run_suite(&cfg).is_err());
    let mut cfg = SuiteConfig::new("lemma-1.1").unwrap();
    cfg.dims = (5, 2);
    assert!(run_suite(&cfg).is_err());
}

#[test]
fn reports_are_deterministic() {
    let cfg = SuiteConfig::new("lemma-2.4").unwrap().with_trials(40).with_seed(1);
    let a = run_suite(&cfg).unwrap().stable_json();
    let b = run_suite(&cfg).unwrap().stable_json();
    assert_eq!(a, b);
    let c = run_suite(&cfg.clone().with_seed(2)).unwrap().stable_json();
    assert_ne!(a, c);
}

#[test]
fn failures_carry_replayable_witnesses() {
    let cfg = SuiteConfig::new("thm-3.3").unwrap().with_trials(200).with_seed(0);
    let r = run_suite(&cfg).unwrap();
    for f in r.failures() {
        let w = f.witness.as_ref().expect("witness on failure");
        let l = liesolv::liealg::format::parse_algebra(&w.algebra.to_string()).unwrap();
        assert_eq!(Some(liesolv::liealg::format::fingerprint(&l)), f.fingerprint);
        assert!(!w.messages.is_empty());
    }
}

#[test]
fn minimal_non_n_search_finds_two_dim_nonabelian() {
    let r = search("minimal-non-N", &[2], (2, 4), 6);
    assert!(!r.starved);
    assert!(r.specimens.iter().any(|s| s.algebra.dim() == 2 && !s.algebra.is_abelian()));
    for s in &r.specimens {
        assert!(is_minimal_non_n(&s.algebra).unwrap().flag);
    }
}

#[test]
fn extreme_non_minimal_search_finds_ext3_shape() {
    let r = search("extreme-non-minimal", &[3], (3, 3), 4);
    assert!(!r.specimens.is_empty());
    let shaped = r.specimens.iter().any(|s| {
        let l = &s.algebra;
        let up = upper_nilpotent_series(l).unwrap();
        let phi = liesolv::series::frattini(l).unwrap();
        up.len() == 3 && up[1].dim() == 2 && phi.dim() == 1
    });
    assert!(shaped);
    for s in &r.specimens {
        assert!(extreme_by_definition(&s.algebra).unwrap().0);
        assert!(!is_minimal_non_n(&s.algebra).unwrap().flag);
    }
}

#[test]
fn minimal_nan_search_reports_coverage() {
    let r = search("minimal-naN", &[2], (4, 6), 2);
    let tried: usize = r.coverage.iter().map(|c| c.tried).sum();
    assert!(tried > 0);
    if r.starved {
        assert!(r.specimens.is_empty() || r.specimens.len() < 2);
    } else {
        assert_eq!(r.specimens.len(), 2);
    }
    for s in &r.specimens {
        assert!(matches_predicate("minimal-naN", &s.algebra).unwrap());
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = SearchConfig {
        predicate: "minimal-non-N".into(),
        fields: vec![FieldSpec::Prime(3)],
        dims: (2, 3),
        seed: 5,
        attempts: 500,
        count: 3,
        cache_dir: Some(dir.path().to_path_buf()),
    };
    let first = find_specimens(&cfg).unwrap();
    assert_eq!(first.from_cache, 0);
    assert!(dir.path().join("specimens-minimal-non-N.json").exists());
    let second = find_specimens(&cfg).unwrap();
    assert_eq!(second.from_cache, first.specimens.len());
    let fa: Vec<_> = first.specimens.iter().map(|s| &s.fingerprint).collect();
    let fb: Vec<_> = second.specimens.iter().map(|s| &s.fingerprint).collect();
    assert_eq!(fa, fb);
}

#[test]
fn specimen_suites_have_no_failures() {
    for name in ["lemma-4.1", "cor-4.5", "thm-4.11"] {
        let cfg = SuiteConfig::new(name).unwrap().with_trials(10);
        let r = run_suite(&cfg).unwrap();
        assert_eq!(r.totals.fail, 0, "{name}");
        assert!(r.totals.non_vacuous > 0, "{name}");
    }
}
