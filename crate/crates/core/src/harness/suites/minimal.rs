use super::sub_upper;
use crate::chief::{complement_of, minimal_ideals};
use crate::classify::{a_structure, classify_nan, extreme_by_definition, is_a_algebra, is_minimal_non_n, NaNType};
use crate::error::Result;
use crate::harness::{Trial, Verdict};
use crate::liealg::LieAlgebra;
use crate::series::{all_ideals, maximal_spaces, maximal_subalgebras, nilradical, nilregularity, upper_nilpotent_series, upper_term};

fn minimal_flag(l: &LieAlgebra) -> Result<bool> {
    Ok(is_minimal_non_n(l)?.flag)
}

pub fn lemma_4_1(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(minimal_flag)? else {
        return Ok(Verdict::Unmet);
    };
    let up = upper_nilpotent_series(&l)?;
    let k = up.len() - 1;
    t.hyp(format!("L minimal non-N(≤{})", k - 1));
    let top = &up[k - 1];
    let l2 = l.product(&l.full(), &l.full());
    t.check_at("(i) L² = N_{k-1}", l2 == *top, "L²", &l2);
    t.check_at("(i) codim N_{k-1} = 1", top.codim() == 1, "N_{k-1}", top);
    for m in maximal_spaces(&l)? {
        let um = sub_upper(&l, &m)?;
        for i in 1..k {
            let nim = upper_term(&um, i);
            if !nim.is_subspace_of(top) {
                let ok = nim.meet(top).dim() + 1 == nim.dim();
                t.check_at("(ii) N_{k-1} ∩ N_i(M) has codim 1 in N_i(M)", ok, "M", &m);
            }
        }
        if up[1].is_subspace_of(&m) {
            let nm = upper_term(&um, 1);
            t.check_at("(iii) N(L) ⊆ M ⇒ N(M) ⊆ N_{k-1}", nm.is_subspace_of(top), "M", &m);
        }
    }
    Ok(Verdict::Checked)
}

/// Extreme, and `L/N(L)` minimal non-N when it is nonzero.
fn extreme_and_quotient(t: &mut Trial, l: &LieAlgebra) -> Result<()> {
    let (e, at) = extreme_by_definition(l)?;
    t.check("L extreme", e, || format!("N_i/φ_i not chief at i = {}", at.unwrap_or(0)));
    let nil = nilradical(l)?;
    if !nil.is_full() {
        let q = l.quotient(&nil)?;
        let ok = is_minimal_non_n(q.quotient())?.flag;
        t.check("L/N(L) minimal non-N(≤n-1)", ok, || "L/N(L) has a maximal of full length".into());
    }
    Ok(())
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

fn cores_nilregular(l: &LieAlgebra) -> Result<bool> {
    let ms = maximal_subalgebras(l)?;
    for core in &ms.cores {
        if !nilregularity(l, &l.subalgebra(core)?)?.nilregular {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn thm_4_3(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(minimal_flag)? else {
        return Ok(Verdict::Unmet);
    };
    if cores_strongly_nilregular(&l)? {
        t.hyp("minimal non-N; class: all maximal cores strongly nilregular");
    } else if is_a_algebra(&l)?.0 {
        t.hyp("minimal non-N; class: A-algebras");
    } else {
        return Ok(Verdict::Vacuous("not in a class known to be a semi-homomorph with the quotient property".into()));
    }
    extreme_and_quotient(t, &l)?;
    Ok(Verdict::Checked)
}

pub fn cor_4_4(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(minimal_flag(l)? && cores_strongly_nilregular(l)?))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("minimal non-N; all maximal cores strongly nilregular");
    extreme_and_quotient(t, &l)?;
    Ok(Verdict::Checked)
}

pub fn cor_4_5(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(minimal_flag(l)? && is_a_algebra(l)?.0))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("minimal non-N A-algebra");
    extreme_and_quotient(t, &l)?;
    Ok(Verdict::Checked)
}

/// `n(L) ≥ 3` and every maximal subalgebra has length at most 2.
fn minimal_non_n_le2(l: &LieAlgebra) -> Result<bool> {
    let mn = is_minimal_non_n(l)?;
    Ok(mn.n >= 3 && mn.max_lengths.iter().all(|&k| k <= 2))
}

pub fn cor_4_6(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(l.derived_length() <= 3 && minimal_non_n_le2(l)?))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("minimal non-N(≤2); solvability index ≤ 3");
    extreme_and_quotient(t, &l)?;
    Ok(Verdict::Checked)
}

pub fn thm_4_8(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(is_a_algebra(l)?.0))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("A-algebra");
    let minimal = minimal_flag(&l)?;
    let s = a_structure(&l)?;
    t.check("minimal non-N ⇔ (i)-(v)", minimal == s.holds(), || {
        format!("minimal {minimal}, conditions {:?}", s.conditions)
    });
    if minimal != s.holds() {
        for (i, a) in s.parts.iter().enumerate() {
            t.subobject(&format!("A_{i}"), a);
        }
    }
    Ok(Verdict::Checked)
}

pub fn thm_4_10(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(l.derived_length() == 3))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("solvability index 3");
    let lhs = minimal_non_n_le2(&l)?;
    let nan = classify_nan(&l)?;
    let rhs = nan.kind == NaNType::TypeI;
    t.check("minimal non-N(2) ⇔ minimal naN of type I", lhs == rhs, || {
        format!("minimal non-N(2) {lhs}, naN {:?}", nan.kind)
    });
    Ok(Verdict::Checked)
}

pub fn thm_4_11(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(minimal_flag)? else {
        return Ok(Verdict::Unmet);
    };
    if !cores_nilregular(&l)? {
        return Ok(Verdict::Vacuous("some maximal core is not nilregular".into()));
    }
    t.hyp("minimal non-N; all maximal cores nilregular");
    let maximals = maximal_spaces(&l)?;
    let mut factors = 0;
    for b in all_ideals(&l)? {
        if b.is_full() {
            continue;
        }
        let q = l.quotient(&b)?;
        for abar in minimal_ideals(q.quotient())? {
            let a = q.pullback(&abar);
            if complement_of(&maximals, &a, &b).is_none() {
                continue;
            }
            factors += 1;
            t.check_at("A/B complemented chief ⇒ L/B minimal non-N", minimal_flag(q.quotient())?, "B", &b);
        }
    }
    if factors == 0 {
        return Ok(Verdict::Vacuous("no complemented chief factor".into()));
    }
    Ok(Verdict::Checked)
}
