use super::{acts_nilpotently, pick, quotient_length, sub_upper};
use crate::chief::minimal_ideals;
use crate::classify::decompose;
use crate::error::Result;
use crate::exactlin::{Matrix, Subspace};
use crate::harness::{Trial, Verdict};
use crate::liealg::LieAlgebra;
use crate::series::{
    all_ideals, frattini, frattini_series, frattini_series_from, lower_series, maximal_subalgebras, nilpotent_length,
    nilradical, nilregularity, upper_nilpotent_series, upper_term,
};

pub fn lemma_1_1(t: &mut Trial) -> Result<Verdict> {
    let l = t.next_algebra()?;
    t.use_algebra(&l);
    let up = upper_nilpotent_series(&l)?;
    let low = lower_series(&l).lower_nilpotent;
    let (r, s) = (up.len() - 1, low.len() - 1);
    if !t.check("(iii) r = s", r == s, || format!("r = {r}, s = {s}")) {
        return Ok(Verdict::Checked);
    }
    for i in 0..=r {
        t.check_at("(i) Γ_{s-i} ⊆ N_i", low[s - i].is_subspace_of(&up[i]), &format!("Γ_{}", s - i), &low[s - i]);
        t.check_at("(ii) Γ_i ⊆ N_{r-i}", low[i].is_subspace_of(&up[r - i]), &format!("Γ_{i}"), &low[i]);
    }
    Ok(Verdict::Checked)
}

pub fn lemma_2_2(t: &mut Trial) -> Result<Verdict> {
    let drawn = t.draw(|l, rng| {
        let phi = frattini(l)?;
        if phi.is_zero() {
            return Ok(None);
        }
        let inside: Vec<Subspace> = all_ideals(l)?
            .into_iter()
            .filter(|i| !i.is_zero() && i.is_subspace_of(&phi))
            .collect();
        Ok(pick(rng, &inside))
    })?;
    let Some((l, b)) = drawn else { return Ok(Verdict::Unmet) };
    t.hyp("B nonzero ideal inside φ(L)");
    t.subobject("B", &b);
    let up = upper_nilpotent_series(&l)?;
    let phis = frattini_series_from(&l, &up)?;
    let n = up.len() - 1;
    let q = l.quotient(&b)?;
    let qup = upper_nilpotent_series(q.quotient())?;
    let qphis = frattini_series(q.quotient())?;
    t.check("n(L/B) = n(L)", qup.len() - 1 == n, || format!("{} vs {n}", qup.len() - 1));
    for i in 1..=n {
        let ni = q.pullback(upper_term(&qup, i));
        t.check_at("N_i(L/B) = N_i(L)/B", ni == up[i], &format!("preimage of N_{i}(L/B)"), &ni);
        match qphis.get(i - 1) {
            Some(p) => {
                let pi = q.pullback(p);
                t.check_at("φ_i(L/B) = φ_i(L)/B", pi == phis[i - 1], &format!("preimage of φ_{i}(L/B)"), &pi);
            }
            None => {
                t.check("φ_i(L/B) = φ_i(L)/B", false, || format!("L/B has no φ_{i}"));
            }
        }
    }
    Ok(Verdict::Checked)
}

pub fn lemma_2_3(t: &mut Trial) -> Result<Verdict> {
    let drawn = t.draw(|l, rng| {
        let up = upper_nilpotent_series(l)?;
        let n = up.len() - 1;
        if n < 2 {
            return Ok(None);
        }
        let r = rand::Rng::random_range(rng, 1..=n);
        let between: Vec<Subspace> = all_ideals(l)?
            .into_iter()
            .filter(|a| up[r - 1].is_subspace_of(a) && a.is_subspace_of(&up[r]))
            .collect();
        Ok(pick(rng, &between).map(|a| (r, n, a)))
    })?;
    let Some((l, (r, n, a))) = drawn else { return Ok(Verdict::Unmet) };
    t.hyp(format!("N_{{r-1}} ⊆ A ⊆ N_r with r = {r}, n(L) = {n}"));
    t.subobject("A", &a);
    let k = quotient_length(&l, &a)?;
    t.check("n(L/A) ∈ {n-r, n-r+1}", k + r == n || k + r == n + 1, || format!("n(L/A) = {k}"));
    Ok(Verdict::Checked)
}

pub fn lemma_2_4(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(nilpotent_length(l)? >= 2))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("n(L) ≥ 2; every maximal subalgebra M");
    let up = upper_nilpotent_series(&l)?;
    let n = up.len() - 1;
    for m in maximal_subalgebras(&l)?.spaces() {
        let um = sub_upper(&l, &m)?;
        let nm = |i: usize| upper_term(&um, i).clone();
        let mut k = None;
        for i in 1..=n {
            let ni = &up[i];
            t.check_at("(i) N_i(L) ∩ M ⊆ N_i(M)", ni.meet(&m).is_subspace_of(&nm(i)), "M", &m);
            let core = l.core(&nm(i));
            t.check_at("(ii) N_i(M)_L ⊆ N_i(L)", core.is_subspace_of(ni), "M", &m);
            if ni.is_subspace_of(&m) {
                t.check_at("(iii) N_i ⊆ M ⇒ N_i(M)_L = N_i(L)", core == *ni, "M", &m);
            } else if k.is_none() {
                k = Some(i);
                t.check_at("(iv) N_k(M)_L = N_k(L) ∩ M", core == ni.meet(&m), "M", &m);
            }
        }
        if up[1].is_subspace_of(&m) {
            t.check_at("(v) N(L) ⊆ M ⇒ N(M) acts nilpotently", acts_nilpotently(&l, &nm(1)), "M", &m);
        }
    }
    Ok(Verdict::Checked)
}

fn moves(d: &Matrix, i: &Subspace) -> bool {
    !i.image(d).is_subspace_of(i)
}

pub fn lemma_2_5(t: &mut Trial) -> Result<Verdict> {
    let drawn = t.draw(|l, rng| {
        if l.field().characteristic() <= 2 {
            return Ok(None);
        }
        let abelian: Vec<Subspace> = all_ideals(l)?
            .into_iter()
            .filter(|i| !i.is_zero() && l.product(i, i).is_zero())
            .collect();
        Ok(pick(rng, &abelian))
    })?;
    let Some((l, i)) = drawn else { return Ok(Verdict::Unmet) };
    t.hyp("p > 2; I nonzero abelian ideal; D ∈ Der(L)");
    t.subobject("I", &i);
    let ders: Vec<Matrix> = l.derivations().into_iter().map(|d| d.matrix().clone()).collect();
    let f = l.field();
    let mut d = None;
    for _ in 0..8 {
        let mut acc = Matrix::zeros(f, l.dim(), l.dim());
        for b in &ders {
            let c = f.from_i64(rand::Rng::random_range(&mut t.rng, 0..f.characteristic() as i64));
            acc = acc.add(&b.scale(&c));
        }
        if moves(&acc, &i) {
            d = Some(acc);
            break;
        }
    }
    let d = d.or_else(|| ders.iter().find(|b| moves(b, &i)).cloned());
    let Some(d) = d else {
        return Ok(Verdict::Vacuous("I is characteristic".into()));
    };
    let target = i.join(&i.image(&d));
    let nil = nilradical(&l)?;
    t.check("I + D(I) ⊆ N(L)", target.is_subspace_of(&nil), || format!("D = {d:?}, I + D(I) = {target}"));
    Ok(Verdict::Checked)
}

pub fn prop_2_7(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(l.field().characteristic() > 2 && !l.is_abelian() && frattini(l)?.is_zero()))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("p > 2; φ(L) = 0; L nonabelian");
    let nil = nilradical(&l)?;
    let w = l.characteristic_witness(&nil);
    t.check("N(L) characteristic", w.is_none(), || format!("moved by D = {:?}", w.expect("witness").matrix()));
    Ok(Verdict::Checked)
}

/// `N(I)` embedded in `L`.
fn nilradical_of(l: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
    let sub = l.subalgebra(s)?;
    Ok(s.lift(&nilradical(sub.induced())?))
}

pub fn prop_2_11(t: &mut Trial) -> Result<Verdict> {
    let drawn = t.draw(|l, rng| {
        let mut ok = Vec::new();
        for i in all_ideals(l)? {
            if i.is_zero() || l.is_nilpotent_subalgebra(&i) {
                continue;
            }
            if nilregularity(l, &l.subalgebra(&i)?)?.nilregular {
                ok.push(i);
            }
        }
        Ok(pick(rng, &ok))
    })?;
    let Some((l, i)) = drawn else { return Ok(Verdict::Unmet) };
    t.hyp("I non-nilpotent nilregular ideal");
    t.subobject("I", &i);
    let ni = nilradical_of(&l, &i)?;
    let nl = nilradical(&l)?;
    t.check_at("N(I) ⊆ N(L)", ni.is_subspace_of(&nl), "N(I)", &ni);
    Ok(Verdict::Checked)
}

/// Maximals with a strongly nilregular core and compatibility index at
/// least `min_r`, as `(M, core, r)`.
fn regular_maximals(l: &LieAlgebra, min_r: usize) -> Result<Vec<(Subspace, Subspace, usize)>> {
    let ms = maximal_subalgebras(l)?;
    let mut out = Vec::new();
    for ((m, core), &r) in ms.maximals.iter().zip(&ms.cores).zip(&ms.compatibility) {
        if r >= min_r && nilregularity(l, &l.subalgebra(core)?)?.strongly_nilregular {
            out.push((m.space().clone(), core.clone(), r));
        }
    }
    Ok(out)
}

pub fn prop_2_12(t: &mut Trial) -> Result<Verdict> {
    let drawn = t.draw(|l, _| {
        let v = regular_maximals(l, 1)?;
        Ok((!v.is_empty()).then_some(v))
    })?;
    let Some((l, qualifying)) = drawn else {
        if let Some(l) = t.fixed().cloned() {
            return necessity(&l);
        }
        return Ok(Verdict::Unmet);
    };
    t.hyp("M maximal, compatibility index r ≥ 1, M_L strongly nilregular");
    let up = upper_nilpotent_series(&l)?;
    for (m, core, r) in qualifying {
        let um = sub_upper(&l, &m)?;
        let uc = sub_upper(&l, &core)?;
        for i in 1..=r {
            let ok = upper_term(&um, i) == &up[i] && upper_term(&uc, i) == &up[i];
            t.check_at("N_i(M) = N_i(M_L) = N_i(L)", ok, "M", &m);
        }
    }
    Ok(Verdict::Checked)
}

/// On an input missing the hypothesis, notes where the conclusion breaks.
fn necessity(l: &LieAlgebra) -> Result<Verdict> {
    let ms = maximal_subalgebras(l)?;
    let up = upper_nilpotent_series(l)?;
    let mut broken = Vec::new();
    for ((m, core), &r) in ms.maximals.iter().zip(&ms.cores).zip(&ms.compatibility) {
        let m = m.space();
        let um = sub_upper(l, m)?;
        let uc = sub_upper(l, core)?;
        if (1..=r).any(|i| upper_term(&um, i) != &up[i] || upper_term(&uc, i) != &up[i]) {
            broken.push(m.to_string());
        }
    }
    let why = if broken.is_empty() {
        "no maximal with strongly nilregular core and r ≥ 1".to_string()
    } else {
        format!(
            "no maximal with strongly nilregular core and r ≥ 1; conclusion fails at {}",
            broken.join(", ")
        )
    };
    Ok(Verdict::Vacuous(why))
}

pub fn prop_2_14(t: &mut Trial) -> Result<Verdict> {
    let drawn = t.draw(|l, rng| {
        let ideals = all_ideals(l)?;
        let mut pairs = Vec::new();
        for (x, a) in ideals.iter().enumerate() {
            for b in &ideals[x + 1..] {
                if !a.is_subspace_of(b) && !b.is_subspace_of(a) {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        Ok(pick(rng, &pairs))
    })?;
    let Some((l, (a, b))) = drawn else { return Ok(Verdict::Unmet) };
    t.hyp("A, B incomparable ideals");
    t.subobject("A", &a);
    t.subobject("B", &b);
    let n = nilpotent_length(&l)?;
    let (na, nb) = (quotient_length(&l, &a)?, quotient_length(&l, &b)?);
    let k = na.max(nb);
    let nab = quotient_length(&l, &a.meet(&b))?;
    t.check("homomorph: n(L/A) ≤ n(L)", na <= n && nb <= n, || format!("{na}, {nb} vs {n}"));
    t.check("formation: n(L/(A∩B)) ≤ max", nab <= k, || format!("n(L/(A∩B)) = {nab}, max = {k}"));
    let phi = frattini(&l)?;
    let nphi = quotient_length(&l, &phi)?;
    t.check("saturated: n(L) ≤ n(L/φ(L))", n <= nphi, || format!("n(L) = {n}, n(L/φ) = {nphi}"));
    let mins = minimal_ideals(&l)?;
    if mins.len() > 1 {
        let mut some = false;
        for m in &mins {
            some |= quotient_length(&l, m)? == n;
        }
        t.check("several minimal ideals: some n(L/A) = n(L)", some, || "none keeps the length".into());
    }
    Ok(Verdict::Checked)
}

pub fn prop_nmax_length(t: &mut Trial) -> Result<Verdict> {
    let drawn = t.draw(|l, _| {
        let v = regular_maximals(l, 0)?;
        Ok((!v.is_empty()).then_some(v))
    })?;
    let Some((l, qualifying)) = drawn else { return Ok(Verdict::Unmet) };
    t.hyp("M maximal with strongly nilregular core");
    let n = nilpotent_length(&l)?;
    for (m, _, _) in qualifying {
        let k = nilpotent_length(l.subalgebra(&m)?.induced())?;
        t.check_at("n(M) ∈ {n(L), n(L)-1}", k == n || k + 1 == n, "M", &m);
    }
    Ok(Verdict::Checked)
}

pub fn thm_2_17(t: &mut Trial) -> Result<Verdict> {
    let l = t.next_algebra()?;
    t.use_algebra(&l);
    let n = nilpotent_length(&l)?;
    let dec = decompose(&l)?;
    t.check("(i)-(iv) hold for the constructed B_i", dec.b.len() == n, || {
        format!("{} parts for n = {n}", dec.b.len())
    });
    Ok(Verdict::Checked)
}

pub fn char2_phifree(t: &mut Trial) -> Result<Verdict> {
    let Some(l) = t.draw_if(|l| Ok(l.field().characteristic() == 2 && !l.is_abelian() && frattini(l)?.is_zero()))? else {
        return Ok(Verdict::Unmet);
    };
    t.hyp("p = 2; φ(L) = 0; L nonabelian");
    let nil = nilradical(&l)?;
    match l.characteristic_witness(&nil) {
        None => t.observe("N(L) characteristic", false),
        Some(d) => {
            t.subobject("N(L)", &nil);
            t.subobject("D(N(L))", &nil.image(d.matrix()));
            t.observe("N(L) not characteristic", true);
        }
    }
    Ok(Verdict::Checked)
}
