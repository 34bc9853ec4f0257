mod extreme;
mod minimal;
mod oracle;
mod series;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Trial, Verdict};
use crate::error::Result;
use crate::exactlin::Subspace;
use crate::liealg::LieAlgebra;
use crate::series::{nilpotent_length, upper_nilpotent_series};

pub(crate) struct SuiteSpec {
    pub name: &'static str,
    pub observation: bool,
    /// Whether the suite runs `trials` random trials.
    pub random: bool,
    pub specimens: &'static [&'static str],
    pub search_dims: Option<(usize, usize)>,
    pub fields: &'static [u32],
    pub dims: (usize, usize),
    pub catalog: &'static [&'static str],
    pub run: fn(&mut Trial) -> Result<Verdict>,
}

impl SuiteSpec {
    const fn random(name: &'static str, fields: &'static [u32], run: fn(&mut Trial) -> Result<Verdict>) -> Self {
        SuiteSpec {
            name,
            observation: false,
            random: true,
            specimens: &[],
            search_dims: None,
            fields,
            dims: (2, 5),
            catalog: &[],
            run,
        }
    }

    const fn on_specimens(mut self, predicates: &'static [&'static str], dims: (usize, usize), random: bool) -> Self {
        self.specimens = predicates;
        self.search_dims = Some(dims);
        self.random = random;
        self
    }

    const fn with_catalog(mut self, catalog: &'static [&'static str]) -> Self {
        self.catalog = catalog;
        self
    }

    const fn observation(mut self) -> Self {
        self.observation = true;
        self
    }
}

const F23: &[u32] = &[2, 3];
const F35: &[u32] = &[3, 5];

const EXTREME_CATALOG: &[&str] = &[
    "T2", "EXT3", "SUP(2,1)", "SUP(3,1)", "SUP(3,2)", "SUP(5,1)", "SUP(5,2)", "H3", "UT2", "EXP2", "X5", "EX1@F2", "EX1@F3",
];

pub(crate) static TABLE: &[SuiteSpec] = &[
    SuiteSpec::random("lemma-1.1", F23, series::lemma_1_1),
    SuiteSpec::random("lemma-2.2", F23, series::lemma_2_2),
    SuiteSpec::random("lemma-2.3", F23, series::lemma_2_3),
    SuiteSpec::random("lemma-2.4", F23, series::lemma_2_4),
    SuiteSpec::random("lemma-2.5", F35, series::lemma_2_5),
    SuiteSpec::random("prop-2.7", F35, series::prop_2_7),
    SuiteSpec::random("prop-2.11", F35, series::prop_2_11),
    SuiteSpec::random("prop-2.12", F35, series::prop_2_12).with_catalog(&["X5"]),
    SuiteSpec::random("prop-2.14", F23, series::prop_2_14),
    SuiteSpec::random("prop-nmax-length", F23, series::prop_nmax_length),
    SuiteSpec::random("thm-2.17", F23, series::thm_2_17),
    SuiteSpec::random("lemma-3.1", F23, extreme::lemma_3_1),
    SuiteSpec::random("lemma-3.2", F23, extreme::lemma_3_2).with_catalog(EXTREME_CATALOG),
    SuiteSpec::random("thm-3.3", F23, extreme::thm_3_3).with_catalog(EXTREME_CATALOG),
    SuiteSpec::random("lemma-3.4", F23, extreme::lemma_3_4).with_catalog(EXTREME_CATALOG),
    SuiteSpec::random("thm-3.5", F23, extreme::thm_3_5).with_catalog(EXTREME_CATALOG),
    SuiteSpec::random("cor-3.6", F23, extreme::cor_3_6).with_catalog(EXTREME_CATALOG),
    SuiteSpec::random("cor-3.7", F23, extreme::cor_3_7).with_catalog(EXTREME_CATALOG),
    SuiteSpec::random("lemma-4.1", F23, minimal::lemma_4_1).on_specimens(&["minimal-non-N"], (2, 5), false),
    SuiteSpec::random("thm-4.3", F35, minimal::thm_4_3).on_specimens(
        &["strongly-nilregular-minimal-non-N", "A-minimal-non-N"],
        (2, 4),
        false,
    ),
    SuiteSpec::random("cor-4.4", F35, minimal::cor_4_4).on_specimens(&["strongly-nilregular-minimal-non-N"], (2, 4), false),
    SuiteSpec::random("cor-4.5", F23, minimal::cor_4_5).on_specimens(&["A-minimal-non-N"], (2, 5), false),
    SuiteSpec::random("cor-4.6", F23, minimal::cor_4_6).on_specimens(&["minimal-naN", "minimal-non-N"], (3, 6), false),
    SuiteSpec::random("thm-4.8", F23, minimal::thm_4_8).on_specimens(&["A-minimal-non-N"], (2, 5), true),
    SuiteSpec::random("thm-4.10", &[2], minimal::thm_4_10).on_specimens(&["minimal-naN"], (4, 6), true),
    SuiteSpec::random("thm-4.11", F35, minimal::thm_4_11).on_specimens(&["minimal-non-N"], (2, 4), false),
    SuiteSpec::random("char2-phifree", &[2], series::char2_phifree).observation(),
    SuiteSpec::random("oracle-nilradical", F23, oracle::nilradical_oracle),
    SuiteSpec::random("oracle-frattini", F23, oracle::frattini_oracle),
    SuiteSpec::random("oracle-chief", F23, oracle::chief_oracle),
];

pub(crate) fn lookup(name: &str) -> Option<&'static SuiteSpec> {
    TABLE.iter().find(|s| s.name.eq_ignore_ascii_case(name))
}

fn pick<T: Clone>(rng: &mut ChaCha8Rng, items: &[T]) -> Option<T> {
    if items.is_empty() {
        None
    } else {
        Some(items[rng.random_range(0..items.len())].clone())
    }
}

/// Upper nilpotent series of the subalgebra `S`, embedded in `L`.
fn sub_upper(l: &LieAlgebra, s: &Subspace) -> Result<Vec<Subspace>> {
    let sub = l.subalgebra(s)?;
    Ok(upper_nilpotent_series(sub.induced())?.iter().map(|t| s.lift(t)).collect())
}

fn quotient_length(l: &LieAlgebra, b: &Subspace) -> Result<usize> {
    nilpotent_length(l.quotient(b)?.quotient())
}

/// `[A, [A, … [A, L]]]` reaches zero.
fn acts_nilpotently(l: &LieAlgebra, a: &Subspace) -> bool {
    let mut cur = l.full();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = l.product(a, &cur);
        if next == cur {
            return false;
        }
        cur = next;
    }
}
