//! Exact rational scalars.
//!
//! Every quantity in the stability pipeline is a rational multiple of the
//! sphere area, so the scalar type is an arbitrary-precision rational kept in
//! canonical form (reduced, positive denominator).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Textual form `p/q`, with `/q` omitted when the denominator is one.
pub fn to_text(q: &Rational) -> String {
    q.to_string()
}

pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    Rational::from_str(t).map_err(|_| Error::Parse(format!("not a rational: {t:?}")))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflowed f64; fall back to a scaled quotient
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Exact rational approximation of a float, with denominator `2^k`.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Common denominator of a vector; multiplying by it yields integers.
pub fn lcm_denominator(v: &[Rational]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub(crate) mod serde_text {
    use super::{parse, to_text, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_text(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_omits_unit_denominator() {
        assert_eq!(to_text(&rat(6, 3)), "2");
        assert_eq!(to_text(&rat(-4, 15)), "-4/15");
        assert_eq!(to_text(&rat(2, -6)), "-1/3");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "1/3", "-138", "-2/15", "1/105"] {
            assert_eq!(to_text(&parse(s).unwrap()), s);
        }
        assert!(parse("1/0x").is_err());
    }

    #[test]
    fn canonical_form() {
        let q = rat(10, -4);
        assert_eq!(q.numer(), &BigInt::from(-5));
        assert_eq!(q.denom(), &BigInt::from(2));
    }
}
