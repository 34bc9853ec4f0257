use crate::chief::{conjugacy_classes, minimal_ideals};
use crate::classify::{
    check_extreme_decomposition, decompose, extreme_by_definition, extreme_crosscheck,
    module_irreducible, structure_flags,
};
use crate::error::Result;
use crate::harness::{Trial, Verdict};
use crate::liealg::LieAlgebra;
use crate::series::{
    all_ideals, frattini, frattini_series_from, lower_series, maximal_spaces, nilradical, upper_nilpotent_series,
};

fn is_extreme_def(l: &LieAlgebra) -> Result<bool> {
    Ok(extreme_by_definition(l)?.0)
}

pub fn lemma_3_1(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| {
        let nil = nilradical(l)?;
        crate::chief::is_chief_factor(l, &nil, &frattini(l)?)
    })?
    else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("N(L)/φ(L) is a chief factor");
    let maximals = maximal_spaces(&l)?;
    let up = upper_nilpotent_series(&l)?;
    let phis = frattini_series_from(&l, &up)?;
    let phi2 = phis.get(1).cloned().unwrap_or_else(|| l.full());
    let mut complemented = Vec::new();
    for a in minimal_ideals(&l)? {
        if maximals.iter().any(|m| !a.is_subspace_of(m)) {
            complemented.push(a);
        }
    }
    t.check("at most one complemented minimal ideal", complemented.len() <= 1, || {
        format!("{} complemented minimal ideals", complemented.len())
    });
    for a in &complemented {
        let q = l.quotient(a)?;
        let phi_q = q.pullback(&frattini(q.quotient())?);
        t.check_at("φ(L/A) = φ_2(L)/A", phi_q == phi2, "A", a);
    }
    Ok(Verdict::Checked)
}

pub fn lemma_3_2(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(l.dim() >= 2 && is_extreme_def(l)?))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("L extreme, dim L ≥ 2");
    for b in all_ideals(&l)? {
        if b.is_full() {
            continue;
        }
        let q = l.quotient(&b)?;
        t.check_at("L/B extreme", is_extreme_def(q.quotient())?, "B", &b);
    }
    Ok(Verdict::Checked)
}

pub fn thm_3_3(t: &mut Trial) -> Result<Verdict> {
    let l = t.next_algebra()?;
    t.use_algebra(&l);
    let x = extreme_crosscheck(&l)?;
    let e = x.by_definition;
    let summary = || format!("extreme {e}, n {}, m {}, c {}, quotients {}", x.n, x.m, x.c, x.quotients_one_complemented);
    let ok_m = t.check("(i) ⇔ (ii) n = m", (x.n == x.m) == e, summary);
    t.check("(i) ⇔ (iii) n = c", (x.n == x.c) == e, summary);
    let ok_q = t.check("(i) ⇔ (iv) quotients", x.quotients_one_complemented == e, summary);
    if !ok_q {
        if let Some(b) = &x.offending_quotient {
            t.subobject("B with two complemented minimal ideals in L/B", b);
        }
    }
    if !ok_m {
        let maximals = maximal_spaces(&l)?;
        for (k, class) in conjugacy_classes(&l, &maximals)?.classes.iter().enumerate() {
            t.subobject(&format!("class {k} representative"), &maximals[class[0]]);
        }
    }
    Ok(Verdict::Checked)
}

pub fn lemma_3_4(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(is_extreme_def)? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("L extreme");
    if l.is_nilpotent() {
        t.check("(i) nilpotent ⇒ dim 1", l.dim() == 1, || format!("dim {}", l.dim()));
    }
    let up = upper_nilpotent_series(&l)?;
    let n = up.len() - 1;
    let top = &up[n - 1];
    let ls = lower_series(&l);
    t.check_at("(ii) Γ_1 = N_{n-1}", ls.lower_nilpotent[1] == *top, "Γ_1", &ls.lower_nilpotent[1]);
    for (k, lk) in ls.lower_central.iter().enumerate().skip(1) {
        t.check_at("(ii) L^k = N_{n-1} for k ≥ 2", lk == top, &format!("L^{}", k + 1), lk);
    }
    t.check_at("(ii) codim N_{n-1} = 1", top.codim() == 1, "N_{n-1}", top);
    Ok(Verdict::Checked)
}

pub fn thm_3_5(t: &mut Trial) -> Result<Verdict> {
    let l = t.next_algebra()?;
    t.use_algebra(&l);
    let dec = decompose(&l)?;
    let e = is_extreme_def(&l)?;
    let d = check_extreme_decomposition(&l, &dec)?;
    t.check("extreme ⇔ dim B_n = 1 and N(U_k)/φ(U_k) chief", e == d, || {
        format!("extreme {e}, decomposition condition {d}")
    });
    if e {
        let bn = dec.b.last().expect("nonempty");
        t.check_at("extreme ⇒ dim B_n = 1", bn.dim() == 1, "B_n", bn);
    }
    Ok(Verdict::Checked)
}

/// `L/φ(L) = A ∔ U` with `A = N(L)/φ(L)` the monolith and `U` a line
/// acting irreducibly on it.
fn monolith_shape(l: &LieAlgebra) -> Result<bool> {
    let q = l.quotient(&frattini(l)?)?;
    let lbar = q.quotient();
    let abar = q.image(&nilradical(l)?);
    if minimal_ideals(lbar)? != vec![abar.clone()] || abar.codim() != 1 {
        return Ok(false);
    }
    module_irreducible(lbar, &lbar.zero(), &abar)
}

pub fn cor_3_6(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(upper_nilpotent_series(l)?.len() <= 3))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("n(L) ≤ 2");
    let e = is_extreme_def(&l)?;
    let shape = l.dim() == 1 || monolith_shape(&l)?;
    t.check("extreme ⇔ dim 1 or monolith shape", e == shape, || format!("extreme {e}, shape {shape}"));
    Ok(Verdict::Checked)
}

pub fn cor_3_7(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(structure_flags(l)?.supersolvable == Some(true)))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("L supersolvable");
    let e = is_extreme_def(&l)?;
    let q = l.quotient(&frattini(&l)?)?;
    let two = q.quotient().dim() == 2 && !q.quotient().is_abelian();
    let rhs = l.dim() == 1 || two;
    t.check("extreme ⇔ dim 1 or L/φ(L) 2-dim nonabelian", e == rhs, || {
        format!("extreme {e}, dim L/φ = {}", q.quotient().dim())
    });
    Ok(Verdict::Checked)
}
