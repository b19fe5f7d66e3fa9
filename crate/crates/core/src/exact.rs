//! Rational helpers shared across the pipeline.
//!
//! Rationals cross the serialization boundary as `{"num": "...", "den": "..."}`
//! with decimal strings, so no precision is lost in certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = BigRational;

pub fn int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio<T: Into<BigInt>>(num: T, den: T) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn ceil(x: &Rational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// `ceil(x)` clamped below at zero, as a machine integer.
pub fn ceil_nonneg_u64(x: &Rational) -> Option<u64> {
    let c = ceil(x);
    if c.is_negative() {
        Some(0)
    } else {
        c.to_u64()
    }
}

pub fn binom2(n: &BigInt) -> BigInt {
    if n < &BigInt::one() {
        return BigInt::zero();
    }
    n * (n - 1) / 2
}

/// Element `a + b*sqrt(d)` of a real quadratic field, with exact sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl Surd {
    pub fn rational(a: Rational, d: &BigInt) -> Self {
        Surd { a, b: Rational::zero(), d: d.clone() }
    }

    pub fn add(&self, o: &Surd) -> Surd {
        debug_assert_eq!(self.d, o.d);
        Surd { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d.clone() }
    }

    pub fn sub(&self, o: &Surd) -> Surd {
        debug_assert_eq!(self.d, o.d);
        Surd { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d.clone() }
    }

    pub fn mul(&self, o: &Surd) -> Surd {
        debug_assert_eq!(self.d, o.d);
        let d = int(self.d.clone());
        Surd {
            a: &self.a * &o.a + &self.b * &o.b * d,
            b: &self.a * &o.b + &self.b * &o.a,
            d: self.d.clone(),
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Surd {
        Surd { a: &self.a + r, b: self.b.clone(), d: self.d.clone() }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 || self.d.is_zero() {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with b^2 d
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * int(self.d.clone());
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

fn sign_of(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

impl RationalRepr {
    fn from_rational(x: &Rational) -> Self {
        RationalRepr { num: x.numer().to_string(), den: x.denom().to_string() }
    }

    fn into_rational<E: serde::de::Error>(self) -> Result<Rational, E> {
        let num: BigInt = self.num.parse().map_err(E::custom)?;
        let den: BigInt = self.den.parse().map_err(E::custom)?;
        if den.is_zero() {
            return Err(E::custom("zero denominator"));
        }
        Ok(Rational::new(num, den))
    }
}

/// `#[serde(with = "exact::serde_rational")]`
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        RationalRepr::from_rational(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        RationalRepr::deserialize(d)?.into_rational()
    }
}

pub mod serde_rational_opt {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref().map(RationalRepr::from_rational).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<RationalRepr>::deserialize(d)?
            .map(RationalRepr::into_rational)
            .transpose()
    }
}

pub mod serde_rational_arr3 {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[Rational; 3], s: S) -> Result<S::Ok, S::Error> {
        x.iter()
            .map(RationalRepr::from_rational)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rational; 3], D::Error> {
        let v = Vec::<RationalRepr>::deserialize(d)?;
        if v.len() != 3 {
            return Err(serde::de::Error::invalid_length(v.len(), &"3 coefficients"));
        }
        let mut it = v.into_iter();
        Ok([
            it.next().unwrap().into_rational()?,
            it.next().unwrap().into_rational()?,
            it.next().unwrap().into_rational()?,
        ])
    }
}

/// Big integers as decimal strings.
pub mod serde_bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
