use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// Field scalars accepted by the dense linear algebra in this crate.
///
/// Exactness of every verification depends on the scalar: with [`Rational`]
/// all zero tests are exact, while `f32`/`f64` are supported for quick
/// numerical experiments only.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {
    fn from_i64(v: i64) -> Self;

    /// Rescales a vector by a nonzero factor so that later eliminations stay
    /// small. Only the span of the vector matters to callers.
    fn normalize_row(row: &mut [Self]) {
        if let Some(lead) = row.iter().find(|x| !x.is_zero()).cloned() {
            for x in row.iter_mut() {
                *x = x.clone() / lead.clone();
            }
        }
    }
}

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    // Clears denominators and removes the integer content, so rows become
    // primitive integer vectors with a positive leading entry.
    fn normalize_row(row: &mut [Self]) {
        let Some(lead) = row.iter().find(|x| !x.is_zero()) else {
            return;
        };
        let negative = lead.is_negative();
        let mut den_lcm = BigInt::one();
        for x in row.iter().filter(|x| !x.is_zero()) {
            den_lcm = den_lcm.lcm(x.denom());
        }
        let mut content = BigInt::zero();
        for x in row.iter().filter(|x| !x.is_zero()) {
            let n = x.numer() * (&den_lcm / x.denom());
            content = content.gcd(&n);
        }
        if negative {
            content = -content;
        }
        let factor = Rational::new(den_lcm, content);
        if factor.is_one() {
            return;
        }
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &factor;
            }
        }
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
}

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `n`, `n/d` or a terminating decimal such as `1.5` or `-0.25`
/// into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{}{}", if int_digits.is_empty() { "0" } else { int_digits }, frac_part);
        let mut n: BigInt = digits.parse().ok()?;
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac_part.len());
        return Some(Rational::new(n, d));
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Serde adapter storing a rational as its `n/d` string.
pub mod serde_rational {
    use super::{fmt_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))
    }

    pub mod vec {
        use super::super::{fmt_rational, parse_rational, Rational};
        use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&fmt_rational(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`"))))
                .collect()
        }
    }
}
