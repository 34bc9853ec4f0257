use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field: either the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    Prime(u32),
}

/// An exact field element. Residues are always reduced into `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Box<BigRational>),
    Residue(u32),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Residue(v) => *v == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Residue(v) => *v == 1,
            Scalar::Rational(q) => q.is_one(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Residue(a), Scalar::Residue(b)) => a.cmp(b),
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue(_), Scalar::Rational(_)) => Ordering::Less,
            (Scalar::Rational(_), Scalar::Residue(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue(v) => write!(f, "{v}"),
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `F5`, `F_5`, `Fp5` or a bare prime.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .trim_start_matches(['F', 'f'])
            .trim_start_matches(['p', 'P'])
            .trim_start_matches('_');
        let p: u64 = digits.parse().map_err(|_| Error::ScalarParse {
            text: s.to_string(),
            reason: "expected Q or F<p>".into(),
        })?;
        FieldSpec::prime(p)
    }
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn modulus(&self) -> Option<u32> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Box::new(BigRational::zero())),
            FieldSpec::Prime(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Box::new(BigRational::one())),
            FieldSpec::Prime(_) => Scalar::Residue(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Box::new(BigRational::from_integer(v.into()))),
            FieldSpec::Prime(p) => Scalar::Residue(v.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        if den == 0 {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(Scalar::Rational(Box::new(BigRational::new(
                num.into(),
                den.into(),
            )))),
            FieldSpec::Prime(_) => {
                let d = self.inv(&self.from_i64(den))?;
                Some(self.mul(&self.from_i64(num), &d))
            }
        }
    }

    /// Whether `s` is a well-formed element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Residue(v)) => v < p,
            _ => false,
        }
    }

    /// Parses a decimal integer or an `a/b` fraction.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let err = |reason: &str| Error::ScalarParse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(Box::new(BigRational::new(num, den)))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.try_into().unwrap_or(0)
                };
                let n = Scalar::Residue(reduce(&num));
                let d = Scalar::Residue(reduce(&den));
                let dinv = self
                    .inv(&d)
                    .ok_or_else(|| err("denominator vanishes in this field"))?;
                Ok(self.mul(&n, &dinv))
            }
        }
    }

    /// All field elements in increasing order; `None` over the rationals.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        self.modulus().map(|p| (0..p).map(Scalar::Residue))
    }

    #[inline]
    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                let s = x + y;
                Scalar::Residue(if s >= *p { s - p } else { s })
            }
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(Box::new(x.as_ref() + y.as_ref()))
            }
            _ => mismatch(self, a, b),
        }
    }

    #[inline]
    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(if x >= y { x - y } else { x + p - y })
            }
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(Box::new(x.as_ref() - y.as_ref()))
            }
            _ => mismatch(self, a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(Box::new(x.as_ref() * y.as_ref()))
            }
            _ => mismatch(self, a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Residue(x)) => {
                Scalar::Residue(if *x == 0 { 0 } else { p - x })
            }
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(Box::new(-x.as_ref())),
            _ => mismatch(self, a, a),
        }
    }

    /// `a + c * b`, the inner step of every elimination.
    #[inline]
    pub fn mul_add(&self, a: &Scalar, c: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, c, b) {
            (FieldSpec::Prime(p), Scalar::Residue(x), Scalar::Residue(s), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u64 + *s as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => self.add(a, &self.mul(c, b)),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Residue(x)) => {
                // Fermat: x^(p-2)
                Some(Scalar::Residue(pow_mod(*x as u64, *p as u64 - 2, *p as u64) as u32))
            }
            (FieldSpec::Rationals, Scalar::Rational(x)) => Some(Scalar::Rational(Box::new(x.recip()))),
            _ => mismatch(self, a, a),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Whether the scalar is the image of a negative integer, for display only.
    pub fn is_negative(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Residue(_) => false,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[cold]
fn mismatch(field: &FieldSpec, a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {a:?} and {b:?} are not both elements of {field}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(5).is_ok());
        assert_eq!(FieldSpec::prime(4), Err(Error::NonPrimeModulus(4)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NonPrimeModulus(1)));
    }

    #[test]
    fn residue_arithmetic() {
        let f = FieldSpec::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b), Scalar::Residue(2));
        assert_eq!(f.sub(&a, &b), Scalar::Residue(4));
        assert_eq!(f.mul(&a, &b), Scalar::Residue(2));
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        assert_eq!(f.neg(&a), Scalar::Residue(2));
        assert_eq!(f.from_i64(-1), Scalar::Residue(4));
    }

    #[test]
    fn parse_scalars() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse_scalar("-3/6").unwrap().to_string(), "-1/2");
        assert_eq!(q.parse_scalar("7").unwrap().to_string(), "7");
        assert!(q.parse_scalar("1/0").is_err());
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.parse_scalar("1/2").unwrap(), Scalar::Residue(2));
        assert_eq!(f3.parse_scalar("-1").unwrap(), Scalar::Residue(2));
        assert!(f3.parse_scalar("1/3").is_err());
    }

    #[test]
    fn field_names() {
        assert_eq!("F3".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(3));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("F_5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert!("F4".parse::<FieldSpec>().is_err());
    }
}
