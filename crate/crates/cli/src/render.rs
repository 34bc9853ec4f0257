use liesolv::{LieAlgebra, Scalar, Subspace};

fn term(coeff: &Scalar, label: &str, first: bool, l: &LieAlgebra) -> String {
    let f = l.field();
    let neg = f.is_negative(coeff);
    let mag = if neg { f.neg(coeff) } else { coeff.clone() };
    let sign = match (first, neg) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => "-",
        (false, false) => "+",
    };
    if mag.is_one() {
        format!("{sign}{label}")
    } else {
        format!("{sign}{mag}{label}")
    }
}

/// `v` as a combination of the basis labels.
pub fn vector(l: &LieAlgebra, v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out.push_str(&term(c, &l.label(i), out.is_empty(), l));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `⟨…⟩` over the RREF rows; `0` and `L` for the extremes.
pub fn span(l: &LieAlgebra, s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    if s.is_full() && s.dim() > 1 {
        return "L".into();
    }
    let rows: Vec<String> = (0..s.dim()).map(|r| vector(l, s.row(r))).collect();
    format!("⟨{}⟩", rows.join(", "))
}

pub fn chain(l: &LieAlgebra, ss: &[Subspace], sep: &str) -> String {
    ss.iter().map(|s| span(l, s)).collect::<Vec<_>>().join(sep)
}
