use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use super::{random_algebra, stream_rng};
use crate::classify::{classify_nan, extreme_by_definition, is_a_algebra, is_minimal_non_n, NaNType};
use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::liealg::format::{fingerprint, parse_algebra, to_canonical_json};
use crate::liealg::LieAlgebra;
use crate::series::{maximal_subalgebras, nilregularity};

pub const PREDICATES: &[&str] = &[
    "minimal-non-N",
    "A-minimal-non-N",
    "minimal-naN",
    "extreme-non-minimal",
    "strongly-nilregular-minimal-non-N",
];

const CHUNK: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub predicate: String,
    pub fields: Vec<FieldSpec>,
    pub dims: (usize, usize),
    pub seed: u64,
    /// Random algebras examined at most.
    pub attempts: usize,
    /// Specimens wanted.
    pub count: usize,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Specimen {
    pub fingerprint: String,
    /// `cache` or `search`.
    pub source: &'static str,
    pub constants: serde_json::Value,
    #[serde(skip)]
    pub algebra: LieAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub field: FieldSpec,
    pub dim: usize,
    pub tried: usize,
    pub matched: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub predicate: String,
    pub specimens: Vec<Specimen>,
    pub attempts_used: usize,
    pub from_cache: usize,
    /// Nothing found within the attempt budget.
    pub starved: bool,
    pub coverage: Vec<Coverage>,
}

fn check_predicate(name: &str) -> Result<()> {
    if PREDICATES.contains(&name) {
        Ok(())
    } else {
        Err(Error::UnknownPredicate(name.to_string()))
    }
}

fn cores_strongly_nilregular(l: &LieAlgebra) -> Result<bool> {
    let ms = maximal_subalgebras(l)?;
    for core in &ms.cores {
        if !nilregularity(l, &l.subalgebra(core)?)?.strongly_nilregular {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates a specimen predicate.
pub fn matches_predicate(predicate: &str, l: &LieAlgebra) -> Result<bool> {
    check_predicate(predicate)?;
    let minimal = |l: &LieAlgebra| -> Result<bool> { Ok(l.dim() >= 2 && is_minimal_non_n(l)?.flag) };
    match predicate {
        "minimal-non-N" => minimal(l),
        "A-minimal-non-N" => Ok(minimal(l)? && is_a_algebra(l)?.0),
        "minimal-naN" => Ok(classify_nan(l)?.kind != NaNType::NotMinimalNaN),
        "extreme-non-minimal" => Ok(extreme_by_definition(l)?.0 && !is_minimal_non_n(l)?.flag),
        _ => Ok(minimal(l)? && cores_strongly_nilregular(l)?),
    }
}

fn cache_file(dir: &Path, predicate: &str) -> PathBuf {
    dir.join(format!("specimens-{predicate}.json"))
}

fn load_cache(dir: &Path, predicate: &str) -> Result<Vec<LieAlgebra>> {
    let path = cache_file(dir, predicate);
    let Ok(text) = fs::read_to_string(&path) else {
        return Ok(Vec::new());
    };
    let entries: Vec<serde_json::Value> =
        serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    entries
        .iter()
        .map(|v| parse_algebra(&v.to_string()))
        .collect()
}

fn store_cache(dir: &Path, predicate: &str, algebras: &BTreeMap<String, String>) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::Format(format!("{}: {e}", dir.display())))?;
    let values: Vec<serde_json::Value> = algebras
        .values()
        .map(|s| serde_json::from_str(s).expect("canonical JSON parses"))
        .collect();
    let text = serde_json::to_string_pretty(&values).expect("values serialize");
    let path = cache_file(dir, predicate);
    fs::write(&path, text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn specimen(l: LieAlgebra, source: &'static str) -> Specimen {
    Specimen {
        fingerprint: fingerprint(&l),
        source,
        constants: serde_json::from_str(&to_canonical_json(&l)).expect("canonical JSON parses"),
        algebra: l,
    }
}

/// Random search for algebras satisfying `cfg.predicate`. Cached specimens
/// matching the field and dimension filters are revalidated and used first;
/// new finds are written back to the cache. Specimens come back in
/// fingerprint order.
pub fn find_specimens(cfg: &SearchConfig) -> Result<SearchReport> {
    check_predicate(&cfg.predicate)?;
    if cfg.fields.is_empty() || cfg.fields.iter().any(|f| !f.is_prime_field()) {
        return Err(Error::PreconditionUnmet("specimen search needs prime fields".into()));
    }
    let mut specimens = Vec::new();
    let mut seen = HashSet::new();
    let mut cached = BTreeMap::new();

    if let Some(dir) = &cfg.cache_dir {
        for l in load_cache(dir, &cfg.predicate)? {
            cached.insert(fingerprint(&l), to_canonical_json(&l));
            let fits = cfg.fields.contains(&l.field()) && (cfg.dims.0..=cfg.dims.1).contains(&l.dim());
            if specimens.len() < cfg.count && fits && matches_predicate(&cfg.predicate, &l)? && seen.insert(fingerprint(&l)) {
                specimens.push(specimen(l, "cache"));
            }
        }
    }
    let from_cache = specimens.len();

    let mut coverage: BTreeMap<(FieldSpec, usize), (usize, usize)> = BTreeMap::new();
    let mut used = 0;
    while specimens.len() < cfg.count && used < cfg.attempts {
        let end = (used + CHUNK).min(cfg.attempts);
        let batch: Vec<(LieAlgebra, bool)> = (used..end)
            .into_par_iter()
            .map(|i| {
                let mut rng = stream_rng(cfg.seed ^ 0x5eed_5eed, i);
                let l = random_algebra(&mut rng, &cfg.fields, cfg.dims)?;
                let hit = matches_predicate(&cfg.predicate, &l)?;
                Ok((l, hit))
            })
            .collect::<Result<_>>()?;
        used = end;
        for (l, hit) in batch {
            let entry = coverage.entry((l.field(), l.dim())).or_default();
            entry.0 += 1;
            if !hit {
                continue;
            }
            entry.1 += 1;
            let fp = fingerprint(&l);
            if specimens.len() < cfg.count && seen.insert(fp.clone()) {
                cached.insert(fp, to_canonical_json(&l));
                specimens.push(specimen(l, "search"));
            }
        }
    }

    if let Some(dir) = &cfg.cache_dir {
        store_cache(dir, &cfg.predicate, &cached)?;
    }
    specimens.sort_by(|a, b| a.fingerprint.cmp(&b.fingerprint));
    Ok(SearchReport {
        predicate: cfg.predicate.clone(),
        starved: specimens.is_empty(),
        specimens,
        attempts_used: used,
        from_cache,
        coverage: coverage
            .into_iter()
            .map(|((field, dim), (tried, matched))| Coverage {
                field,
                dim,
                tried,
                matched,
            })
            .collect(),
    })
}
