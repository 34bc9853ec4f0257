//! Worked examples checked against fixed expected values.

use liesolv::classify::{extreme_by_definition, is_minimal_non_n, structure_flags, subalgebra_length};
use liesolv::liealg::{catalog, exp2_derivation, is_derivation};
use liesolv::series::{
    compatibility_index, frattini, lower_series, maximal_spaces, nilpotent_length, nilradical, upper_nilpotent_series,
};
use liesolv::{FieldSpec, LieAlgebra, Result, Subspace};
use serde::Serialize;

use crate::render::span;

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Golden {
    pub name: &'static str,
    pub citation: &'static str,
    pub claims: Vec<Claim>,
}

impl Golden {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.ok)
    }

    fn push(&mut self, claim: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.claims.push(Claim {
            claim: claim.into(),
            ok: expected == actual,
            expected,
            actual,
        });
    }

    fn space(&mut self, l: &LieAlgebra, claim: &str, expected: &Subspace, actual: &Subspace) {
        self.push(claim, span(l, expected), span(l, actual));
    }
}

pub const NAMES: &[&str] = &["EX1", "EXP2", "X5", "SUP", "EXT3"];

fn basis(l: &LieAlgebra, idx: &[usize]) -> Subspace {
    let f = l.field();
    let vs: Vec<_> = idx
        .iter()
        .map(|&i| (0..l.dim()).map(|k| if k == i { f.one() } else { f.zero() }).collect())
        .collect();
    Subspace::span(f, l.dim(), &vs)
}

fn ex1() -> Result<Golden> {
    let mut g = Golden {
        name: "EX1",
        citation: "worked example EX1: upper and lower nilpotent series over Q",
        claims: vec![],
    };
    let l = catalog("EX1", None)?;
    let up = upper_nilpotent_series(&l)?;
    let low = lower_series(&l).lower_nilpotent;
    g.space(&l, "N_1", &basis(&l, &[1, 2, 3]), &up[1]);
    g.space(&l, "N_2", &l.full(), up.get(2).unwrap_or(&l.zero()));
    g.space(&l, "Γ_1", &basis(&l, &[2, 3]), &low[1]);
    g.space(&l, "Γ_2", &l.zero(), low.get(2).unwrap_or(&l.full()));
    g.push("n(L)", 2, up.len() - 1);
    g.push("N_1 ≠ Γ_1", true, up[1] != low[1]);
    Ok(g)
}

fn exp2() -> Result<Golden> {
    let mut g = Golden {
        name: "EXP2",
        citation: "worked example EXP2 over F2: the nilradical need not be characteristic",
        claims: vec![],
    };
    let f = FieldSpec::Prime(2);
    let l = catalog("EXP2", None)?;
    let nil = nilradical(&l)?;
    g.space(&l, "N(L)", &basis(&l, &[0, 1, 3]), &nil);
    g.space(&l, "φ(L)", &basis(&l, &[0]), &frattini(&l)?);
    let d = exp2_derivation(f);
    g.push("D is a derivation", true, is_derivation(&l, &d));
    let dn = nil.image(&d);
    g.space(&l, "D(N(L))", &basis(&l, &[1, 2]), &dn);
    g.push("D(N(L)) ⊆ N(L)", false, dn.is_subspace_of(&nil));
    g.push("N(L) characteristic", false, l.is_characteristic(&nil));

    let x = catalog("X5", None)?;
    let inner = basis(&x, &[1, 2, 3, 4]);
    let nil_inner = basis(&x, &[1, 2, 4]);
    g.push("X5: L ideal", true, x.is_ideal(&inner));
    g.push("X5: N(L) ideal", false, x.is_ideal(&nil_inner));
    Ok(g)
}

fn x5() -> Result<Golden> {
    let mut g = Golden {
        name: "X5",
        citation: "worked example X5 over F2: a maximal subalgebra without the nilregular hypothesis",
        claims: vec![],
    };
    let x = catalog("X5", None)?;
    let maximals = maximal_spaces(&x)?;
    let m = basis(&x, &[0, 1, 2]);
    let l = basis(&x, &[1, 2, 3, 4]);
    g.push("M = ⟨d,x1,x2⟩ maximal", true, maximals.contains(&m));
    g.push("L = ⟨x1,x2,x3,x4⟩ maximal", true, maximals.contains(&l));
    g.push("compatibility index of M", 1, compatibility_index(&x, &m)?);
    g.push("compatibility index of L", 1, compatibility_index(&x, &l)?);
    let nil = nilradical(&x)?;
    g.space(&x, "N(X5)", &basis(&x, &[1, 2]), &nil);
    g.space(&x, "core of M", &basis(&x, &[1, 2]), &x.core(&m));
    let sub = x.subalgebra(&l)?;
    let nl = l.lift(&nilradical(sub.induced())?);
    g.push("N_1(L) = N_1(X5)", false, nl == nil);
    Ok(g)
}

fn sup() -> Result<Golden> {
    let mut g = Golden {
        name: "SUP",
        citation: "worked example SUP(p,alpha): supersolvable extreme algebras with one-dimensional Frattini",
        claims: vec![],
    };
    for p in [2u32, 3, 5] {
        for a in 1..p as i64 {
            let l = catalog(&format!("SUP({p},{a})"), None)?;
            let tag = format!("SUP({p},{a})");
            g.push(format!("{tag} supersolvable"), true, structure_flags(&l)?.supersolvable == Some(true));
            g.push(format!("{tag} extreme"), true, extreme_by_definition(&l)?.0);
            let phi = frattini(&l)?;
            g.push(format!("{tag} dim φ"), 1, phi.dim());
            let q = l.quotient(&phi)?;
            let two = q.quotient().dim() == 2 && !q.quotient().is_abelian();
            g.push(format!("{tag} L/φ 2-dim nonabelian"), true, two);
        }
    }
    Ok(g)
}

fn ext3() -> Result<Golden> {
    let mut g = Golden {
        name: "EXT3",
        citation: "worked example EXT3 over F3: extreme but not minimal non-N",
        claims: vec![],
    };
    let l = catalog("EXT3", None)?;
    g.push("extreme", true, extreme_by_definition(&l)?.0);
    g.space(&l, "φ(L)", &basis(&l, &[2]), &frattini(&l)?);
    g.space(&l, "N(L)", &basis(&l, &[1, 2]), &nilradical(&l)?);
    g.push("minimal non-N", false, is_minimal_non_n(&l)?.flag);
    let w = basis(&l, &[0, 2]);
    g.push("⟨x,z⟩ maximal", true, maximal_spaces(&l)?.contains(&w));
    g.push("n(⟨x,z⟩)", 2, subalgebra_length(&l, &w)?);
    g.push("n(L)", 2, nilpotent_length(&l)?);
    Ok(g)
}

pub fn run(name: &str) -> Result<Golden> {
    match name.to_ascii_uppercase().as_str() {
        "EX1" => ex1(),
        "EXP2" => exp2(),
        "X5" => x5(),
        "SUP" => sup(),
        "EXT3" => ext3(),
        _ => Err(liesolv::Error::UnknownCatalog(name.into())),
    }
}
