//! JSON structure-constant files.
//!
//! ```json
//! {
//!   "field": {"Fp": 2},
//!   "dim": 2,
//!   "labels": ["x", "y"],
//!   "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1"}}]
//! }
//! ```
//!
//! Indices are 0-based with `i < j`; zero coefficients are omitted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use super::algebra::{LieAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar};

#[derive(Deserialize)]
#[serde(untagged)]
enum FieldRepr {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    field: FieldRepr,
    dim: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<Entry>,
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    parse_constants(text)?.validate()
}

/// Parses without validating the Lie identities.
pub fn parse_constants(text: &str) -> Result<StructureConstants> {
    let repr: FileRepr = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let field = match repr.field {
        FieldRepr::Name(s) if s == "Q" => FieldSpec::Rationals,
        FieldRepr::Name(s) => return Err(Error::Format(format!("field: unknown field {s:?}, expected \"Q\" or {{\"Fp\": p}}"))),
        FieldRepr::Prime { fp } => FieldSpec::prime(fp)?,
    };
    let n = repr.dim;
    let mut sc = StructureConstants::new(field, n);
    sc.labels = repr.labels;
    let mut seen = std::collections::BTreeSet::new();
    for (idx, e) in repr.brackets.into_iter().enumerate() {
        if e.i >= n || e.j >= n {
            return Err(Error::Format(format!("brackets[{idx}]: index out of range for dim {n}")));
        }
        if e.i > e.j {
            return Err(Error::Format(format!("brackets[{idx}]: expected i <= j, got i={} j={}", e.i, e.j)));
        }
        if !seen.insert((e.i, e.j)) {
            return Err(Error::Format(format!("brackets[{idx}]: duplicate entry ({}, {})", e.i, e.j)));
        }
        let mut v = vec![field.zero(); n];
        for (k, s) in &e.coeffs {
            let k: usize = k
                .parse()
                .map_err(|_| Error::Format(format!("brackets[{idx}].coeffs: bad index {k:?}")))?;
            if k >= n {
                return Err(Error::Format(format!("brackets[{idx}].coeffs: index {k} out of range")));
            }
            v[k] = field.parse_scalar(s)?;
        }
        if e.i == e.j {
            // fed to validation, which reports the alternating violation
            sc.set_raw(e.i, e.i, v);
        } else {
            sc.set(e.i, e.j, v);
        }
    }
    Ok(sc)
}

fn scalar_text(s: &Scalar) -> String {
    s.to_string()
}

/// Canonical serialization: fixed key order, entries sorted by `(i, j)`,
/// coefficient keys ascending.
pub fn to_canonical_json(l: &LieAlgebra) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    match l.field() {
        FieldSpec::Rationals => out.push_str("  \"field\": \"Q\",\n"),
        FieldSpec::Prime(p) => {
            let _ = writeln!(out, "  \"field\": {{\"Fp\": {p}}},");
        }
    }
    let _ = writeln!(out, "  \"dim\": {},", l.dim());
    if let Some(labels) = l.labels() {
        let quoted: Vec<String> = labels
            .iter()
            .map(|s| serde_json::to_string(s).expect("string"))
            .collect();
        let _ = writeln!(out, "  \"labels\": [{}],", quoted.join(", "));
    }
    out.push_str("  \"brackets\": [");
    let mut first = true;
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let v = l.basis_bracket(i, j);
            if v.iter().all(Scalar::is_zero) {
                continue;
            }
            out.push_str(if first { "\n" } else { ",\n" });
            first = false;
            let coeffs: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("\"{k}\": \"{}\"", scalar_text(c)))
                .collect();
            let _ = write!(out, "    {{\"i\": {i}, \"j\": {j}, \"coeffs\": {{{}}}}}", coeffs.join(", "));
        }
    }
    out.push_str(if first { "]\n" } else { "\n  ]\n" });
    out.push_str("}\n");
    out
}

/// Hex SHA-256 of the canonical serialization with labels dropped, so that
/// relabelled copies share a fingerprint.
pub fn fingerprint(l: &LieAlgebra) -> String {
    let mut bare = l.clone();
    bare.set_labels(None);
    hex::encode(Sha256::digest(to_canonical_json(&bare).as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    #[test]
    fn round_trip_ex1() {
        let l = catalog("EX1", None).unwrap();
        let text = to_canonical_json(&l);
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back, l);
        assert_eq!(to_canonical_json(&back), text);
    }

    #[test]
    fn non_prime_modulus() {
        let text = r#"{"field": {"Fp": 4}, "dim": 1, "brackets": []}"#;
        assert_eq!(parse_algebra(text), Err(Error::NonPrimeModulus(4)));
    }

    #[test]
    fn diagonal_entry_is_alternating_error() {
        let text = r#"{"field": "Q", "dim": 2, "brackets": [{"i": 0, "j": 0, "coeffs": {"1": "1"}}]}"#;
        assert_eq!(parse_algebra(text), Err(Error::AlternatingViolation { i: 0, k: 1 }));
    }

    #[test]
    fn descending_pair_rejected() {
        let text = r#"{"field": "Q", "dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": {"1": "1"}}]}"#;
        assert!(matches!(parse_algebra(text), Err(Error::Format(_))));
    }
}
