mod goldens;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use liesolv::chief::{chief_series_with, conjugacy_classes};
use liesolv::classify::{check_extreme_decomposition, classify, decompose};
use liesolv::exactlin::{budget, set_budget, Budget};
use liesolv::harness::{find_specimens, run_suite, suite_names, SearchConfig, SuiteConfig, PREDICATES};
use liesolv::liealg::format::{fingerprint, parse_algebra, to_canonical_json};
use liesolv::liealg::{catalog, CATALOG_NAMES};
use liesolv::series::{maximal_subalgebras, nilradical, series_report};
use liesolv::{FieldSpec, LieAlgebra, Subspace};
use serde::Serialize;
use serde_json::{json, Value};

const CACHE_ENV: &str = "LIESOLV_CACHE_DIR";

#[derive(Parser)]
#[command(name = "liesolv", version, about = "Exact structure of finite-dimensional solvable Lie algebras")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Overrides such as `f2=5,f3=4,subspaces=200000`.
    #[arg(long, global = true)]
    budget: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct Source {
    /// Structure-constant file.
    path: Option<PathBuf>,
    /// Catalog entry instead of a file.
    #[arg(long, conflicts_with = "path")]
    catalog: Option<String>,
    /// Field for the catalog entry.
    #[arg(long, requires = "catalog")]
    field: Option<FieldSpec>,
}

#[derive(Subcommand)]
enum Verb {
    /// Parse, validate and print the canonical form.
    Validate(Source),
    /// Series, maximals, chief data and classification together.
    Analyze(Source),
    /// Derived, central, nilpotent and Frattini series.
    Series(Source),
    /// Maximal subalgebras with cores and compatibility indices.
    Maximals(Source),
    /// A chief series with complemented factors and c(L).
    Chief {
        #[command(flatten)]
        source: Source,
        /// Shuffles the choice of minimal ideals.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Extreme, minimal non-N, A-algebra and related predicates.
    Classify(Source),
    /// The B_i / U_i decomposition.
    Decompose(Source),
    /// Reproduces the worked examples.
    Examples {
        /// One of EX1, EXP2, X5, SUP, EXT3; all when omitted.
        name: Option<String>,
    },
    /// Runs theorem suites.
    Verify {
        /// Suite name, repeatable, or `all`.
        #[arg(long, required = true)]
        suite: Vec<String>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fields, comma separated; the suite default when omitted.
        #[arg(long, value_delimiter = ',')]
        field: Vec<FieldSpec>,
        /// Dimension range such as `2-5`.
        #[arg(long)]
        dims: Option<String>,
        /// Catalog entries to add, `NAME` or `NAME@F3`.
        #[arg(long, value_delimiter = ',')]
        catalog: Vec<String>,
    },
    /// Random search for specimens of a predicate.
    Search {
        #[arg(long)]
        predicate: String,
        #[arg(long, value_delimiter = ',', default_value = "F2,F3")]
        field: Vec<FieldSpec>,
        #[arg(long, default_value = "2-5")]
        dims: String,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 3000)]
        attempts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Serialize)]
struct Report {
    command: String,
    config: Value,
    results: Value,
    witnesses: Value,
}

struct Done {
    report: Report,
    text: String,
    /// Suite failure or golden mismatch.
    failed: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok(done) => {
            let out = match cli.format {
                Format::Json => serde_json::to_string_pretty(&done.report).expect("report serializes") + "\n",
                Format::Text => done.text,
            };
            if let Err(e) = emit(cli.output.as_deref(), &out) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            ExitCode::from(if done.failed { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(path: Option<&Path>, out: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, out).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn parse_budget(spec: &str) -> anyhow::Result<Budget> {
    let mut b = Budget::default();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| anyhow!("budget entry {part:?} is not key=value"))?;
        let n: u128 = v.trim().parse().with_context(|| format!("budget value {v:?}"))?;
        match k.trim().to_ascii_lowercase().as_str() {
            "f2" => b.max_dim_f2 = n as usize,
            "f3" => b.max_dim_f3 = n as usize,
            "f5" => b.max_dim_f5 = n as usize,
            "other" => b.max_dim_other = n as usize,
            "subspaces" => b.max_subspaces = n,
            other => bail!("unknown budget key {other:?} (f2, f3, f5, other, subspaces)"),
        }
    }
    Ok(b)
}

fn parse_dims(s: &str) -> anyhow::Result<(usize, usize)> {
    let (a, b) = match s.split_once('-') {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let lo = a.trim().parse().with_context(|| format!("dims {s:?}"))?;
    let hi = b.trim().parse().with_context(|| format!("dims {s:?}"))?;
    if lo > hi {
        bail!("dims {s:?}: empty range");
    }
    Ok((lo, hi))
}

fn cache_dir(output: Option<&Path>) -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(dir));
    }
    output.map(|p| {
        let parent = p.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
        parent.join("liesolv-cache")
    })
}

fn load(src: &Source) -> anyhow::Result<(LieAlgebra, Value)> {
    match (&src.path, &src.catalog) {
        (Some(p), None) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let l = parse_algebra(&text).with_context(|| p.display().to_string())?;
            Ok((l, json!({ "path": p.display().to_string() })))
        }
        (None, Some(name)) => {
            let l = catalog(name, src.field)?;
            let config = json!({ "catalog": name, "field": l.field().to_string() });
            Ok((l, config))
        }
        _ => bail!("give a structure-constant file or --catalog NAME (one of {})", CATALOG_NAMES.join(", ")),
    }
}

fn spaces(ss: &[Subspace]) -> Value {
    json!(ss)
}

fn header(l: &LieAlgebra) -> String {
    format!("dim {} over {}, fingerprint {}\n", l.dim(), l.field(), &fingerprint(l)[..16])
}

fn execute(cli: &Cli) -> anyhow::Result<Done> {
    if let Some(spec) = &cli.budget {
        set_budget(parse_budget(spec)?);
    }
    match &cli.verb {
        Verb::Validate(src) => validate(src),
        Verb::Analyze(src) => analyze(src),
        Verb::Series(src) => series(src),
        Verb::Maximals(src) => maximals(src),
        Verb::Chief { source, seed } => chief(source, *seed),
        Verb::Classify(src) => classify_cmd(src),
        Verb::Decompose(src) => decompose_cmd(src),
        Verb::Examples { name } => examples(name.as_deref()),
        Verb::Verify {
            suite,
            trials,
            seed,
            field,
            dims,
            catalog,
        } => verify(cli, suite, *trials, *seed, field, dims.as_deref(), catalog),
        Verb::Search {
            predicate,
            field,
            dims,
            count,
            attempts,
            seed,
        } => search(cli, predicate, field, dims, *count, *attempts, *seed),
    }
}

fn done(command: &str, config: Value, results: Value, witnesses: Value, text: String) -> Done {
    Done {
        report: Report {
            command: command.into(),
            config,
            results,
            witnesses,
        },
        text,
        failed: false,
    }
}

fn validate(src: &Source) -> anyhow::Result<Done> {
    let (l, config) = load(src)?;
    let canonical: Value = serde_json::from_str(&to_canonical_json(&l))?;
    let results = json!({
        "dim": l.dim(),
        "field": l.field().to_string(),
        "fingerprint": fingerprint(&l),
        "derived_length": l.derived_length(),
        "canonical": canonical,
    });
    let text = format!("{}valid, derived length {}\n{}\n", header(&l), l.derived_length(), to_canonical_json(&l));
    Ok(done("validate", config, results, json!({}), text))
}

fn series_text(l: &LieAlgebra, r: &liesolv::series::SeriesReport) -> String {
    use render::chain;
    let mut t = String::new();
    t += &format!("derived series        {}\n", chain(l, &r.derived, " ⊇ "));
    t += &format!("lower central series  {}\n", chain(l, &r.lower_central, " ⊇ "));
    t += &format!("upper nilpotent N_i   {}\n", chain(l, &r.upper_nilpotent, " ⊆ "));
    t += &format!("lower nilpotent Γ_i   {}\n", chain(l, &r.lower_nilpotent, " ⊇ "));
    if let Some(fs) = &r.frattini_series {
        t += &format!("Frattini φ_i          {}\n", chain(l, fs, ", "));
    }
    t += &format!(
        "n(L) = {}, derived length {}, nilpotency class {}\n",
        r.nilpotent_length,
        r.derived_length,
        r.nilpotency_class.map_or("-".into(), |c| c.to_string())
    );
    t
}

fn series(src: &Source) -> anyhow::Result<Done> {
    let (l, config) = load(src)?;
    let r = series_report(&l)?;
    let text = header(&l) + &series_text(&l, &r);
    Ok(done("series", config, serde_json::to_value(&r)?, json!({}), text))
}

fn maximals_value(l: &LieAlgebra) -> anyhow::Result<(Value, String)> {
    let ms = maximal_subalgebras(l)?;
    let mut rows = Vec::new();
    let mut t = String::new();
    for (i, m) in ms.maximals.iter().enumerate() {
        rows.push(json!({
            "space": m.space(),
            "core": ms.cores[i],
            "compatibility": ms.compatibility[i],
        }));
        t += &format!(
            "M{i:<3} {}  core {}  compatibility {}\n",
            render::span(l, m.space()),
            render::span(l, &ms.cores[i]),
            ms.compatibility[i]
        );
    }
    t += &format!("φ(L) = {}\n", render::span(l, &ms.frattini));
    Ok((json!({ "maximals": rows, "frattini": ms.frattini }), t))
}

fn maximals(src: &Source) -> anyhow::Result<Done> {
    let (l, config) = load(src)?;
    let (v, t) = maximals_value(&l)?;
    Ok(done("maximals", config, v, json!({}), header(&l) + &t))
}

fn chief_value(l: &LieAlgebra, seed: Option<u64>) -> anyhow::Result<(Value, Value, String)> {
    let maximals = liesolv::series::maximal_spaces(l)?;
    let cs = chief_series_with(l, seed, &maximals)?;
    let m = conjugacy_classes(l, &maximals)?.m_count;
    let complements: Vec<Option<&Subspace>> = cs.complements.iter().map(|c| c.as_ref().map(|s| s.space())).collect();
    let mut t = String::new();
    for (i, w) in cs.chain.windows(2).enumerate() {
        let tag = match complements[i] {
            Some(c) => format!("complemented by {}", render::span(l, c)),
            None => "Frattini".into(),
        };
        t += &format!("A_{}/A_{}  {} / {}  {tag}\n", i + 1, i, render::span(l, &w[1]), render::span(l, &w[0]));
    }
    t += &format!("c(L) = {}, m(L) = {}\n", cs.c_count, m);
    let v = json!({
        "chain": spaces(&cs.chain),
        "complemented": cs.complemented,
        "factor_dims": cs.factor_dims(),
        "c": cs.c_count,
        "m": m,
    });
    Ok((v, json!({ "complements": complements }), t))
}

fn chief(src: &Source, seed: Option<u64>) -> anyhow::Result<Done> {
    let (l, mut config) = load(src)?;
    config["seed"] = json!(seed);
    let (v, w, t) = chief_value(&l, seed)?;
    Ok(done("chief", config, v, w, header(&l) + &t))
}

fn classify_value(l: &LieAlgebra) -> anyhow::Result<(Value, Value, String)> {
    let r = classify(l)?;
    let x = &r.extreme_crosscheck;
    let span = |s: &Option<Subspace>| s.as_ref().map_or("-".into(), |s| render::span(l, s));
    let mut t = String::new();
    t += &format!("extreme: {}  (n {}, m {}, c {}, quotients {})\n", r.extreme, x.n, x.m, x.c, x.quotients_one_complemented);
    if !r.extreme_agree {
        t += "warning: the extreme conditions disagree on this algebra\n";
    }
    t += &format!("minimal_non_N: {}", r.minimal_non_n.flag);
    if let Some(w) = &r.minimal_non_n.witness {
        t += &format!("  witness {} of length {}", render::span(l, w), r.minimal_non_n.n);
    }
    t += "\n";
    t += &format!("A-algebra: {}  witness {}\n", r.a_algebra, span(&r.a_witness));
    t += &format!("supersolvable: {}\n", r.supersolvable);
    t += &format!("nilpotent-by-abelian: {}\n", r.nilpotent_by_abelian);
    t += &format!("solvability index: {}\n", r.solvability_index);
    t += &format!("minimal naN: {:?}\n", r.nan.kind);
    t += &format!("primitive: {}  core-free maximal {}\n", r.primitive, span(&r.core_free_maximal));
    let w = json!({
        "minimal_non_N": r.minimal_non_n.witness,
        "a_algebra": r.a_witness,
        "extreme_offending_quotient": x.offending_quotient,
        "core_free_maximal": r.core_free_maximal,
        "nan": r.nan.witness,
    });
    Ok((serde_json::to_value(&r)?, w, t))
}

fn classify_cmd(src: &Source) -> anyhow::Result<Done> {
    let (l, config) = load(src)?;
    let (v, w, t) = classify_value(&l)?;
    Ok(done("classify", config, v, w, header(&l) + &t))
}

fn decompose_cmd(src: &Source) -> anyhow::Result<Done> {
    let (l, config) = load(src)?;
    let d = decompose(&l)?;
    let cond = check_extreme_decomposition(&l, &d)?;
    let mut t = header(&l);
    for (i, b) in d.b.iter().enumerate() {
        t += &format!("B_{} = {}\n", i + 1, render::span(&l, b));
    }
    for (i, u) in d.u.iter().enumerate() {
        t += &format!("U_{} = {}\n", i, render::span(&l, u));
    }
    t += &format!("dim B_n = 1 and every N(U_k)/φ(U_k) chief: {cond}\n");
    let v = json!({ "b": d.b, "u": d.u, "extreme_condition": cond });
    Ok(done("decompose", config, v, json!({}), t))
}

fn analyze(src: &Source) -> anyhow::Result<Done> {
    let (l, config) = load(src)?;
    let sr = series_report(&l)?;
    let mut text = header(&l) + &series_text(&l, &sr);
    let mut results = json!({ "series": sr, "nilradical": nilradical(&l)? });
    let mut witnesses = json!({});
    if l.field().is_prime_field() {
        let (mv, mt) = maximals_value(&l)?;
        let (cv, cw, ct) = chief_value(&l, None)?;
        let (kv, kw, kt) = classify_value(&l)?;
        text += &format!("\n{mt}\n{ct}\n{kt}");
        results["maximals"] = mv;
        results["chief"] = cv;
        results["classify"] = kv;
        witnesses = json!({ "chief": cw, "classify": kw });
    } else {
        text += "(maximal, chief and classification data need a prime field)\n";
    }
    Ok(done("analyze", config, results, witnesses, text))
}

fn examples(name: Option<&str>) -> anyhow::Result<Done> {
    let names: Vec<&str> = match name {
        Some(n) => vec![n],
        None => goldens::NAMES.to_vec(),
    };
    let mut all = Vec::new();
    for n in names {
        all.push(goldens::run(n).with_context(|| format!("example {n} (known: {})", goldens::NAMES.join(", ")))?);
    }
    let mut text = String::new();
    for g in &all {
        text += &format!("{} [{}]  {}\n", g.name, if g.passed() { "ok" } else { "MISMATCH" }, g.citation);
        for c in &g.claims {
            let mark = if c.ok { "  ok  " } else { "  FAIL" };
            text += &format!("{mark} {}: {}", c.claim, c.actual);
            if !c.ok {
                text += &format!(" (expected {})", c.expected);
            }
            text += "\n";
        }
    }
    let mismatches: Vec<Value> = all
        .iter()
        .flat_map(|g| g.claims.iter().filter(|c| !c.ok).map(move |c| json!({ "example": g.name, "claim": c })))
        .collect();
    let failed = !mismatches.is_empty();
    let mut d = done(
        "examples",
        json!({ "names": all.iter().map(|g| g.name).collect::<Vec<_>>() }),
        serde_json::to_value(&all)?,
        json!(mismatches),
        text,
    );
    d.failed = failed;
    Ok(d)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    cli: &Cli,
    suites: &[String],
    trials: usize,
    seed: u64,
    fields: &[FieldSpec],
    dims: Option<&str>,
    catalog: &[String],
) -> anyhow::Result<Done> {
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    let names: Vec<String> = if suites.iter().any(|s| s == "all") {
        suite_names().into_iter().map(String::from).collect()
    } else {
        suites.to_vec()
    };
    let cache = cache_dir(cli.output.as_deref());
    let mut reports = Vec::new();
    let mut configs = Vec::new();
    for name in &names {
        let mut cfg = SuiteConfig::new(name)?.with_trials(trials).with_seed(seed);
        if !fields.is_empty() {
            cfg.fields = fields.to_vec();
        }
        if let Some(d) = dims {
            cfg.dims = parse_dims(d)?;
        }
        cfg.catalog.extend(catalog.iter().cloned());
        if cli.budget.is_some() {
            cfg.budget = Some(budget());
        }
        cfg.cache_dir = cache.clone();
        configs.push(serde_json::to_value(&cfg)?);
        reports.push(run_suite(&cfg)?);
    }
    let mut text = String::new();
    let mut witnesses = Vec::new();
    for r in &reports {
        let t = &r.totals;
        let status = if r.observation {
            "observation"
        } else if r.passed() {
            "pass"
        } else {
            "FAIL"
        };
        text += &format!(
            "{:<20} {status:<11} trials {:>4}  pass {:>4}  fail {:>3}  vacuous {:>4}  starved {:>4}  non-vacuous {:>4}\n",
            r.suite, t.trials, t.pass, t.fail, t.vacuous, t.starved, t.non_vacuous
        );
        for s in &r.search {
            text += &format!(
                "    search {}: {} specimens ({} cached), {} attempts{}\n",
                s.predicate,
                s.specimens.len(),
                s.from_cache,
                s.attempts_used,
                if s.starved { ", starved" } else { "" }
            );
        }
        for (finding, n) in &r.findings {
            text += &format!("    finding {finding}: {n}\n");
        }
        for f in r.failures() {
            if let Some(w) = &f.witness {
                text += &format!("    trial {} ({}): {}\n", f.index, f.source, w.messages.join("; "));
                text += &format!("      algebra {}\n", w.algebra);
            }
            witnesses.push(json!({ "suite": r.suite, "trial": f.index, "witness": f.witness }));
        }
    }
    let failed = reports.iter().any(|r| !r.passed());
    let mut results = Vec::new();
    for r in &reports {
        let v: Value = serde_json::from_str(&r.stable_json())?;
        results.push(v);
    }
    let mut d = done("verify", json!(configs), json!(results), json!(witnesses), text);
    d.failed = failed;
    Ok(d)
}

fn search(
    cli: &Cli,
    predicate: &str,
    fields: &[FieldSpec],
    dims: &str,
    count: usize,
    attempts: usize,
    seed: u64,
) -> anyhow::Result<Done> {
    if !PREDICATES.contains(&predicate) {
        bail!("unknown predicate {predicate:?} (one of {})", PREDICATES.join(", "));
    }
    let cfg = SearchConfig {
        predicate: predicate.into(),
        fields: fields.to_vec(),
        dims: parse_dims(dims)?,
        seed,
        attempts,
        count,
        cache_dir: cache_dir(cli.output.as_deref()),
    };
    let r = find_specimens(&cfg)?;
    let mut text = format!(
        "{}: {} specimens ({} cached) after {} attempts{}\n",
        r.predicate,
        r.specimens.len(),
        r.from_cache,
        r.attempts_used,
        if r.starved { ", starved" } else { "" }
    );
    for c in &r.coverage {
        text += &format!("    {} dim {}: tried {}, matched {}\n", c.field, c.dim, c.tried, c.matched);
    }
    for s in &r.specimens {
        text += &format!("  {} {}\n", &s.fingerprint[..16], s.constants);
    }
    let config = json!({
        "predicate": predicate,
        "fields": fields.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "dims": cfg.dims,
        "count": count,
        "attempts": attempts,
        "seed": seed,
    });
    Ok(done("search", config, serde_json::to_value(&r)?, json!({}), text))
}
