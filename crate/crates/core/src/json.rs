//! Serde helpers for exact integers.
//!
//! Integers up to 2^53 - 1 are written as JSON numbers; larger values are
//! written as decimal strings so that no consumer can silently round them.
//! Both forms are accepted on input.

use std::fmt;

use num_bigint::BigUint;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const MAX_SAFE_INTEGER: u64 = (1 << 53) - 1;

/// A `u64` with the exact-integer JSON encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(pub u64);

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0 <= MAX_SAFE_INTEGER {
            serializer.serialize_u64(self.0)
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}

struct ExactIntVisitor;

impl<'de> Visitor<'de> for ExactIntVisitor {
    type Value = ExactInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a nonnegative integer or a decimal string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactInt, E> {
        Ok(ExactInt(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactInt, E> {
        u64::try_from(v)
            .map(ExactInt)
            .map_err(|_| E::custom(format!("negative integer {v}")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactInt, E> {
        v.parse::<u64>()
            .map(ExactInt)
            .map_err(|_| E::custom(format!("invalid decimal integer {v:?}")))
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ExactIntVisitor)
    }
}

pub mod exact {
    use super::*;

    pub fn serialize<S: Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
        ExactInt(*v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        ExactInt::deserialize(d).map(|x| x.0)
    }
}

pub mod exact_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[u64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|&x| ExactInt(x)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u64>, D::Error> {
        let raw = Vec::<ExactInt>::deserialize(d)?;
        Ok(raw.into_iter().map(|x| x.0).collect())
    }
}

pub mod exact_vec_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<u64>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            v.iter()
                .map(|row| row.iter().map(|&x| ExactInt(x)).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<u64>>, D::Error> {
        let raw = Vec::<Vec<ExactInt>>::deserialize(d)?;
        Ok(raw
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.0).collect())
            .collect())
    }
}

pub mod exact_option {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<u64>, s: S) -> Result<S::Ok, S::Error> {
        v.map(ExactInt).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u64>, D::Error> {
        Ok(Option::<ExactInt>::deserialize(d)?.map(|x| x.0))
    }
}

/// Arbitrary-precision naturals are always written as decimal strings.
pub mod biguint_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let raw = String::deserialize(d)?;
        BigUint::parse_bytes(raw.as_bytes(), 10)
            .ok_or_else(|| de::Error::custom(format!("invalid decimal integer {raw:?}")))
    }
}


/// Exact rationals as `{"num": "<decimal>", "den": "<decimal>"}` in lowest
/// terms with a positive denominator.
pub mod rational {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Raw {
        num: String,
        den: String,
    }

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        Raw {
            num: v.numer().to_str_radix(10),
            den: v.denom().to_str_radix(10),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let raw = Raw::deserialize(d)?;
        let parse = |s: &str| {
            BigInt::parse_bytes(s.as_bytes(), 10)
                .ok_or_else(|| de::Error::custom(format!("invalid decimal integer {s:?}")))
        };
        let num = parse(&raw.num)?;
        let den = parse(&raw.den)?;
        if den.is_zero() {
            return Err(de::Error::custom("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
}

pub mod exact_option_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Vec<u64>>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref()
            .map(|v| v.iter().map(|&x| ExactInt(x)).collect::<Vec<_>>())
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<u64>>, D::Error> {
        Ok(Option::<Vec<ExactInt>>::deserialize(d)?.map(|v| v.into_iter().map(|x| x.0).collect()))
    }
}
