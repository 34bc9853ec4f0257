use crate::chief::{chief_series_with, is_chief_factor};
use crate::error::Result;
use crate::harness::{Trial, Verdict};
use crate::series::{
    frattini, intersect_all, maximal_spaces, maximal_spaces_ascending, nilradical, nilradical_by_enumeration,
};

pub fn nilradical_oracle(t: &mut Trial) -> Result<Verdict> {
    let l = t.next_algebra()?;
    t.use_algebra(&l);
    let fast = nilradical(&l)?;
    let slow = nilradical_by_enumeration(&l)?;
    if !t.check_at("sum of nilpotent principal ideals = largest nilpotent ideal", fast == slow, "N(L)", &fast) {
        t.subobject("by enumeration", &slow);
    }
    Ok(Verdict::Checked)
}

pub fn frattini_oracle(t: &mut Trial) -> Result<Verdict> {
    let l = t.next_algebra()?;
    t.use_algebra(&l);
    let mut down = maximal_spaces(&l)?;
    let mut up = maximal_spaces_ascending(&l)?;
    down.sort();
    up.sort();
    t.check("descending and ascending scans give the same maximals", down == up, || {
        format!("{} vs {} maximals", down.len(), up.len())
    });
    let phi = frattini(&l)?;
    let other = intersect_all(&l, &up);
    if !t.check_at("φ(L) agrees across scan orders", phi == other, "φ(L)", &phi) {
        t.subobject("intersection of ascending scan", &other);
    }
    Ok(Verdict::Checked)
}

pub fn chief_oracle(t: &mut Trial) -> Result<Verdict> {
    let l = t.next_algebra()?;
    t.use_algebra(&l);
    let maximals = maximal_spaces(&l)?;
    let base = chief_series_with(&l, None, &maximals)?;
    for k in 0..=10u64 {
        let seed = rand::Rng::random(&mut t.rng);
        let cs = if k == 0 { base.clone() } else { chief_series_with(&l, Some(seed), &maximals)? };
        t.check("c(L) independent of the chief series", cs.c_count == base.c_count, || {
            format!("{} vs {}", cs.c_count, base.c_count)
        });
        for (i, w) in cs.chain.windows(2).enumerate() {
            t.check_at("each factor is chief", is_chief_factor(&l, &w[1], &w[0])?, &format!("A_{}", i + 1), &w[1]);
            if let Some(m) = &cs.complements[i] {
                let m = m.space();
                let ok = maximals.contains(m) && w[1].join(m).is_full() && w[1].meet(m) == w[0];
                t.check_at("complement witness is a maximal complement", ok, "M", m);
            }
        }
    }
    Ok(Verdict::Checked)
}
