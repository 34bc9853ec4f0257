use super::algebra::{LieAlgebra, StructureConstants};
use super::construct::split_extension;
use super::derivation::Derivation;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix};

/// Names accepted by [`catalog`]; `SUP` takes `(p, alpha)`.
pub const CATALOG_NAMES: &[&str] = &["EX1", "EXP2", "X5", "SUP(p,alpha)", "EXT3", "T2", "H3", "UT2"];

/// Field each entry lives over when no override is given.
pub fn default_field(name: &str) -> Option<FieldSpec> {
    match name.to_ascii_uppercase().as_str() {
        "EX1" => Some(FieldSpec::Rationals),
        "EXP2" | "X5" | "T2" => Some(FieldSpec::Prime(2)),
        "EXT3" | "H3" | "UT2" => Some(FieldSpec::Prime(3)),
        _ => parse_sup(name).ok().flatten().map(|(p, _)| FieldSpec::Prime(p)),
    }
}

/// Parses `SUP(p,a)` (also `SUPα(p,a)` or `SUPalpha(p,a)`).
fn parse_sup(name: &str) -> Result<Option<(u32, i64)>> {
    let upper = name.trim().to_uppercase();
    let rest = ["SUPΑ", "SUPALPHA", "SUP"]
        .iter()
        .find_map(|p| upper.strip_prefix(p));
    let Some(rest) = rest else {
        return Ok(None);
    };
    let inner = rest
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(Error::UnknownCatalog(name.to_string()));
    }
    let p: u64 = parts[0].parse().map_err(|_| Error::UnknownCatalog(name.to_string()))?;
    let a: i64 = parts[1].parse().map_err(|_| Error::UnknownCatalog(name.to_string()))?;
    let FieldSpec::Prime(p) = FieldSpec::prime(p)? else {
        unreachable!()
    };
    Ok(Some((p, a)))
}

/// A named example algebra, optionally over another field.
pub fn catalog(name: &str, field: Option<FieldSpec>) -> Result<LieAlgebra> {
    let key = name.trim().to_ascii_uppercase();
    if let Some((p, a)) = parse_sup(name)? {
        let f = field.unwrap_or(FieldSpec::Prime(p));
        let alpha = f.from_i64(a);
        if alpha.is_zero() {
            return Err(Error::PreconditionUnmet("alpha must be nonzero in the field".into()));
        }
        return sup(f, a);
    }
    let f = field
        .or_else(|| default_field(&key))
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    match key.as_str() {
        "EX1" => {
            let mut sc = StructureConstants::new(f, 4).with_labels(&["x1", "x2", "x3", "x4"]);
            sc.set_int(0, 1, &[(2, 1)]);
            sc.set_int(0, 2, &[(2, 1)]);
            sc.set_int(0, 3, &[(3, 1)]);
            sc.set_int(1, 2, &[(3, 1)]);
            sc.validate()
        }
        "EXP2" => exp2(f),
        "X5" => {
            let l = exp2(f)?;
            let d = Derivation::new(&l, exp2_derivation(f))?;
            Ok(split_extension(&l, &d))
        }
        "EXT3" => sup(f, 1),
        "T2" => {
            let mut sc = StructureConstants::new(f, 2).with_labels(&["x", "y"]);
            sc.set_int(0, 1, &[(1, 1)]);
            sc.validate()
        }
        "H3" => {
            let mut sc = StructureConstants::new(f, 3).with_labels(&["x", "y", "z"]);
            sc.set_int(0, 1, &[(2, 1)]);
            sc.validate()
        }
        "UT2" => {
            let mut sc = StructureConstants::new(f, 3).with_labels(&["e11", "e12", "e22"]);
            sc.set_int(0, 1, &[(1, 1)]);
            sc.set_int(1, 2, &[(1, 1)]);
            sc.validate()
        }
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

fn sup(f: FieldSpec, alpha: i64) -> Result<LieAlgebra> {
    let mut sc = StructureConstants::new(f, 3).with_labels(&["x", "y", "z"]);
    sc.set_int(0, 1, &[(1, 1), (2, 1)]);
    sc.set_int(0, 2, &[(2, alpha)]);
    sc.validate()
}

fn exp2(f: FieldSpec) -> Result<LieAlgebra> {
    let mut sc = StructureConstants::new(f, 4).with_labels(&["x1", "x2", "x3", "x4"]);
    sc.set_int(3, 1, &[(0, 1)]);
    sc.set_int(2, 0, &[(0, 1)]);
    sc.set_int(2, 1, &[(1, 1)]);
    sc.validate()
}

/// `D(x1) = x2, D(x4) = x3`, the other basis vectors killed.
pub fn exp2_derivation(f: FieldSpec) -> Matrix {
    let mut m = Matrix::zeros(f, 4, 4);
    m.set(1, 0, f.one());
    m.set(2, 3, f.one());
    m
}
