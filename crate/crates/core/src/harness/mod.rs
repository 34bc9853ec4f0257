//! Verification suites: each suite draws algebras (random, catalog or
//! specimen), filters them by the hypotheses of one structural result and
//! checks its conclusion. Reports are deterministic per configuration.

mod specimens;
mod suites;

use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use specimens::{find_specimens, matches_predicate, Coverage, SearchConfig, SearchReport, Specimen, PREDICATES};

use crate::error::{Error, Result};
use crate::exactlin::{budget, set_budget, Budget, FieldSpec, Subspace};
use crate::liealg::format::{fingerprint, to_canonical_json};
use crate::liealg::{catalog, random_solvable, LieAlgebra};

/// Retries per trial while looking for an algebra meeting the hypotheses.
pub const RETRIES: usize = 40;

/// Every suite name accepted by [`run_suite`].
pub fn suite_names() -> Vec<&'static str> {
    suites::TABLE.iter().map(|s| s.name).collect()
}

/// Whether the named suite only records observations.
pub fn is_observation(suite: &str) -> bool {
    suites::lookup(suite).is_some_and(|s| s.observation)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: String,
    /// Random trials; specimen and catalog trials come on top.
    pub trials: usize,
    /// Inclusive range, clamped per field to the budget.
    pub dims: (usize, usize),
    pub fields: Vec<FieldSpec>,
    pub seed: u64,
    pub budget: Option<Budget>,
    /// Entries `NAME` or `NAME@F3`, checked before the random trials.
    pub catalog: Vec<String>,
    /// Specimens requested from the search, for suites that use them.
    pub specimens: usize,
    pub search_attempts: usize,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
}

impl SuiteConfig {
    /// The suite's default fields, dimensions and catalog, 200 trials, seed 0.
    pub fn new(suite: &str) -> Result<Self> {
        let spec = suites::lookup(suite).ok_or_else(|| Error::UnknownSuite(suite.to_string()))?;
        Ok(SuiteConfig {
            suite: spec.name.to_string(),
            trials: 200,
            dims: spec.dims,
            fields: spec.fields.iter().map(|&p| FieldSpec::Prime(p)).collect(),
            seed: 0,
            budget: None,
            catalog: spec.catalog.iter().map(|s| s.to_string()).collect(),
            specimens: 12,
            search_attempts: 3000,
            cache_dir: None,
        })
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    /// Hypotheses hold only in a degenerate way, or a fixed input misses them.
    Vacuous,
    /// No random algebra met the hypotheses within the retry budget.
    Starved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedSubspace {
    pub name: String,
    pub space: Subspace,
}

/// Everything needed to replay a trial: the algebra, what went wrong and the
/// subspaces involved.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub algebra: serde_json::Value,
    pub messages: Vec<String>,
    pub subobjects: Vec<NamedSubspace>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    /// `random`, `catalog:NAME` or `specimen:PREDICATE`.
    pub source: String,
    pub fingerprint: Option<String>,
    pub field: Option<FieldSpec>,
    pub dim: Option<usize>,
    pub hypotheses: Vec<String>,
    pub claims: Vec<String>,
    pub outcome: Outcome,
    pub note: Option<String>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub trials: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub starved: usize,
    /// Passes plus failures.
    pub non_vacuous: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub observation: bool,
    pub config: SuiteConfig,
    pub trials: Vec<TrialRecord>,
    pub totals: Totals,
    /// Note counts, for observation suites.
    pub findings: Vec<(String, usize)>,
    pub search: Vec<SearchReport>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &TrialRecord> {
        self.trials.iter().filter(|t| t.outcome == Outcome::Fail)
    }

    /// Pretty JSON with the elapsed time zeroed, for comparing runs.
    pub fn stable_json(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0;
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }
}

/// A random algebra with field and dimension drawn from the given lists.
pub(crate) fn random_algebra(rng: &mut ChaCha8Rng, fields: &[FieldSpec], dims: (usize, usize)) -> Result<LieAlgebra> {
    let f = fields[rng.random_range(0..fields.len())];
    let hi = dims.1.min(budget().dim_limit(f));
    let lo = dims.0.min(hi);
    let d = rng.random_range(lo..=hi);
    let stages = rng.random_range(1..=3);
    random_solvable(f, d, stages, rng.random())
}

/// Stream `index` of the master seed.
pub(crate) fn stream_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub(crate) fn parse_catalog_entry(entry: &str) -> Result<LieAlgebra> {
    match entry.split_once('@') {
        Some((name, field)) => catalog(name, Some(field.trim().parse()?)),
        None => catalog(entry, None),
    }
}

pub(crate) enum Verdict {
    Checked,
    Vacuous(String),
    Unmet,
}

/// State of one trial while its suite function runs.
pub(crate) struct Trial {
    pub rng: ChaCha8Rng,
    fields: Vec<FieldSpec>,
    dims: (usize, usize),
    fixed: Option<LieAlgebra>,
    record: TrialRecord,
    algebra: Option<LieAlgebra>,
    messages: Vec<String>,
    subobjects: Vec<NamedSubspace>,
    observed: Option<(String, bool)>,
}

impl Trial {
    pub fn fixed(&self) -> Option<&LieAlgebra> {
        self.fixed.as_ref()
    }

    pub fn next_algebra(&mut self) -> Result<LieAlgebra> {
        match &self.fixed {
            Some(l) => Ok(l.clone()),
            None => random_algebra(&mut self.rng, &self.fields, self.dims),
        }
    }

    /// First algebra for which `hyp` returns a value; a fixed input gets one
    /// attempt.
    pub fn draw<T>(
        &mut self,
        mut hyp: impl FnMut(&LieAlgebra, &mut ChaCha8Rng) -> Result<Option<T>>,
    ) -> Result<Option<(LieAlgebra, T)>> {
        let attempts = if self.fixed.is_some() { 1 } else { RETRIES };
        for _ in 0..attempts {
            let l = self.next_algebra()?;
            if let Some(h) = hyp(&l, &mut self.rng)? {
                self.use_algebra(&l);
                return Ok(Some((l, h)));
            }
        }
        if let Some(l) = self.fixed.clone() {
            self.use_algebra(&l);
        }
        Ok(None)
    }

    /// Like [`Trial::draw`] with a yes/no hypothesis.
    pub fn draw_if(&mut self, mut hyp: impl FnMut(&LieAlgebra) -> Result<bool>) -> Result<Option<LieAlgebra>> {
        Ok(self.draw(|l, _| Ok(hyp(l)?.then_some(())))?.map(|(l, _)| l))
    }

    pub fn use_algebra(&mut self, l: &LieAlgebra) {
        self.record.fingerprint = Some(fingerprint(l));
        self.record.field = Some(l.field());
        self.record.dim = Some(l.dim());
        self.algebra = Some(l.clone());
    }

    pub fn hyp(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.record.hypotheses.contains(&text) {
            self.record.hypotheses.push(text);
        }
    }

    fn claim(&mut self, claim: &str) {
        if !self.record.claims.iter().any(|c| c == claim) {
            self.record.claims.push(claim.to_string());
        }
    }

    pub fn check(&mut self, claim: &str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.claim(claim);
        if !ok {
            self.messages.push(format!("{claim}: {}", detail()));
        }
        ok
    }

    /// Records `space` as the offending subobject when the check fails.
    pub fn check_at(&mut self, claim: &str, ok: bool, name: &str, space: &Subspace) -> bool {
        self.check(claim, ok, || format!("at {name} = {space}"));
        if !ok {
            self.subobject(name, space);
        }
        ok
    }

    pub fn subobject(&mut self, name: &str, space: &Subspace) {
        self.subobjects.push(NamedSubspace {
            name: name.to_string(),
            space: space.clone(),
        });
    }

    /// Observation-suite finding; `keep` attaches the algebra to the record.
    pub fn observe(&mut self, finding: impl Into<String>, keep: bool) {
        self.observed = Some((finding.into(), keep));
    }

    fn witness(&self, messages: Vec<String>) -> Option<Witness> {
        let l = self.algebra.as_ref()?;
        Some(Witness {
            algebra: serde_json::from_str(&to_canonical_json(l)).expect("canonical JSON parses"),
            messages,
            subobjects: self.subobjects.clone(),
        })
    }

    fn finish(mut self, verdict: Result<Verdict>) -> TrialRecord {
        let fixed = self.fixed.is_some();
        let (outcome, note) = match verdict {
            Err(e) => {
                self.messages.push(format!("error: {e}"));
                (Outcome::Fail, None)
            }
            Ok(_) if !self.messages.is_empty() => (Outcome::Fail, None),
            Ok(Verdict::Checked) => (Outcome::Pass, None),
            Ok(Verdict::Vacuous(why)) => (Outcome::Vacuous, Some(why)),
            Ok(Verdict::Unmet) if fixed => (Outcome::Vacuous, Some("hypotheses not met".to_string())),
            Ok(Verdict::Unmet) => (Outcome::Starved, Some(format!("hypotheses not met in {RETRIES} draws"))),
        };
        self.record.outcome = outcome;
        if outcome == Outcome::Fail {
            let messages = std::mem::take(&mut self.messages);
            self.record.witness = self.witness(messages);
        } else if let Some((finding, keep)) = self.observed.take() {
            if keep {
                self.record.witness = self.witness(Vec::new());
            }
            self.record.note = Some(finding);
        } else {
            self.record.note = note;
        }
        self.record
    }
}

struct Job {
    source: String,
    fixed: Option<LieAlgebra>,
}

/// Runs one suite. Trials run in parallel; each has its own seed stream,
/// so the report does not depend on scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let spec = suites::lookup(&cfg.suite).ok_or_else(|| Error::UnknownSuite(cfg.suite.clone()))?;
    if cfg.fields.is_empty() || cfg.dims.0 > cfg.dims.1 {
        return Err(Error::PreconditionUnmet("empty field list or dimension range".into()));
    }
    if cfg.fields.iter().any(|f| !f.is_prime_field()) {
        return Err(Error::UnsupportedOverRationals("run_suite"));
    }
    if let Some(b) = cfg.budget {
        set_budget(b);
    }
    let start = Instant::now();

    let mut jobs = Vec::new();
    for entry in &cfg.catalog {
        jobs.push(Job {
            source: format!("catalog:{entry}"),
            fixed: Some(parse_catalog_entry(entry)?),
        });
    }
    let mut search = Vec::new();
    for predicate in spec.specimens {
        let report = find_specimens(&SearchConfig {
            predicate: predicate.to_string(),
            fields: cfg.fields.clone(),
            dims: spec.search_dims.unwrap_or(cfg.dims),
            seed: cfg.seed,
            attempts: cfg.search_attempts,
            count: cfg.specimens,
            cache_dir: cfg.cache_dir.clone(),
        })?;
        for s in &report.specimens {
            jobs.push(Job {
                source: format!("specimen:{predicate}"),
                fixed: Some(s.algebra.clone()),
            });
        }
        search.push(report);
    }
    if spec.random {
        for _ in 0..cfg.trials {
            jobs.push(Job {
                source: "random".into(),
                fixed: None,
            });
        }
    }

    let mut trials: Vec<TrialRecord> = jobs
        .into_par_iter()
        .enumerate()
        .map(|(index, job)| {
            let mut t = Trial {
                rng: stream_rng(cfg.seed, index),
                fields: cfg.fields.clone(),
                dims: cfg.dims,
                fixed: job.fixed,
                record: TrialRecord {
                    index,
                    source: job.source,
                    fingerprint: None,
                    field: None,
                    dim: None,
                    hypotheses: Vec::new(),
                    claims: Vec::new(),
                    outcome: Outcome::Pass,
                    note: None,
                    witness: None,
                },
                algebra: None,
                messages: Vec::new(),
                subobjects: Vec::new(),
                observed: None,
            };
            let verdict = (spec.run)(&mut t);
            t.finish(verdict)
        })
        .collect();
    if trials.is_empty() {
        trials.push(TrialRecord {
            index: 0,
            source: "specimen".into(),
            fingerprint: None,
            field: None,
            dim: None,
            hypotheses: Vec::new(),
            claims: Vec::new(),
            outcome: Outcome::Starved,
            note: Some("specimen search found nothing".into()),
            witness: None,
        });
    }

    let mut totals = Totals {
        trials: trials.len(),
        ..Totals::default()
    };
    for t in &trials {
        match t.outcome {
            Outcome::Pass => totals.pass += 1,
            Outcome::Fail => totals.fail += 1,
            Outcome::Vacuous => totals.vacuous += 1,
            Outcome::Starved => totals.starved += 1,
        }
    }
    totals.non_vacuous = totals.pass + totals.fail;

    let mut findings: Vec<(String, usize)> = Vec::new();
    if spec.observation {
        for t in &trials {
            if let Some(n) = &t.note {
                match findings.iter_mut().find(|(k, _)| k == n) {
                    Some((_, c)) => *c += 1,
                    None => findings.push((n.clone(), 1)),
                }
            }
        }
        findings.sort();
    }

    Ok(SuiteReport {
        suite: spec.name.to_string(),
        observation: spec.observation,
        config: cfg.clone(),
        trials,
        totals,
        findings,
        search,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
