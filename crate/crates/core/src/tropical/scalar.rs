//! Exact max-plus scalars.
//!
//! `TropScalar` is either a rational number or the bottom element `-inf`.
//! Tropical addition is `max`, tropical multiplication is `+`, the tropical
//! zero is `-inf` and the tropical one is `0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational type used throughout the crate.
pub type Rational = BigRational;

/// Build an integral rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Build `num / den` (reduced).
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Render a rational as `"n"` or `"p/q"` in lowest terms.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Element of the max-plus semiring `Q ∪ {-inf}`.
///
/// The derived order puts `NegInf` below every finite value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropScalar {
    NegInf,
    Finite(Rational),
}

impl TropScalar {
    pub const ZERO: TropScalar = TropScalar::NegInf;

    pub fn one() -> Self {
        TropScalar::Finite(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        TropScalar::Finite(rat(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropScalar::Finite(_))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropScalar::Finite(q) => Some(q),
            TropScalar::NegInf => None,
        }
    }

    pub fn into_finite(self) -> Option<Rational> {
        match self {
            TropScalar::Finite(q) => Some(q),
            TropScalar::NegInf => None,
        }
    }

    /// `Some(n)` when the value is a finite integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        self.finite()
            .filter(|q| q.is_integer())
            .and_then(|q| q.numer().to_i64())
    }

    /// Tropical sum, `max(self, other)`.
    pub fn oplus(&self, other: &TropScalar) -> TropScalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical product, `self + other` with `-inf` absorbing.
    pub fn otimes(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::NegInf,
        }
    }

    /// Classical difference `self - other` where `other` is finite.
    pub fn minus(&self, other: &Rational) -> TropScalar {
        match self {
            TropScalar::Finite(a) => TropScalar::Finite(a - other),
            TropScalar::NegInf => TropScalar::NegInf,
        }
    }

    /// Classical sum `self + c` (tropical multiplication by a finite `c`).
    pub fn shift(&self, c: &Rational) -> TropScalar {
        match self {
            TropScalar::Finite(a) => TropScalar::Finite(a + c),
            TropScalar::NegInf => TropScalar::NegInf,
        }
    }

    /// Tropical power `self^{⊙k}` (classical scaling by `k`).
    pub fn tpow(&self, k: i64) -> TropScalar {
        match self {
            TropScalar::Finite(a) => TropScalar::Finite(a * rat(k)),
            TropScalar::NegInf if k == 0 => TropScalar::one(),
            TropScalar::NegInf => TropScalar::NegInf,
        }
    }

    /// Classical multiplication by a positive rational (a semiring automorphism).
    pub fn scale(&self, c: &Rational) -> TropScalar {
        debug_assert!(c.is_positive());
        match self {
            TropScalar::Finite(a) => TropScalar::Finite(a * c),
            TropScalar::NegInf => TropScalar::NegInf,
        }
    }

    /// Tropical sum of an iterator; `-inf` for an empty iterator.
    pub fn sum<'a, I: IntoIterator<Item = &'a TropScalar>>(it: I) -> TropScalar {
        it.into_iter().max().cloned().unwrap_or(TropScalar::NegInf)
    }

    /// Tropical product of an iterator; `0` for an empty iterator.
    pub fn product<'a, I: IntoIterator<Item = &'a TropScalar>>(it: I) -> TropScalar {
        let mut acc = Rational::zero();
        for x in it {
            match x {
                TropScalar::Finite(q) => acc += q,
                TropScalar::NegInf => return TropScalar::NegInf,
            }
        }
        TropScalar::Finite(acc)
    }
}

impl From<i64> for TropScalar {
    fn from(n: i64) -> Self {
        TropScalar::int(n)
    }
}

impl From<Rational> for TropScalar {
    fn from(q: Rational) -> Self {
        TropScalar::Finite(q)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => f.write_str("-inf"),
            TropScalar::Finite(q) => f.write_str(&format_rational(q)),
        }
    }
}

impl FromStr for TropScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("-inf") || t == "−∞" {
            Ok(TropScalar::NegInf)
        } else {
            parse_rational(t).map(TropScalar::Finite)
        }
    }
}

/// Integers are emitted as JSON numbers when they fit in `i64`; everything
/// else as a string (`"p/q"` or `"-inf"`).
impl Serialize for TropScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for TropScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = TropScalar;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer, a string \"p/q\", or \"-inf\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<TropScalar, E> {
                Ok(TropScalar::int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<TropScalar, E> {
                Ok(TropScalar::Finite(Rational::from_integer(BigInt::from(v))))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<TropScalar, E> {
                v.parse().map_err(|e: Error| E::custom(e.to_string()))
            }
        }
        d.deserialize_any(V)
    }
}

/// Compare a finite rational against a tropical scalar.
pub fn cmp_finite(a: &Rational, b: &TropScalar) -> Ordering {
    match b {
        TropScalar::NegInf => Ordering::Greater,
        TropScalar::Finite(q) => a.cmp(q),
    }
}

/// Least common multiple of the denominators of all finite entries.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a TropScalar>>(it: I) -> BigInt {
    it.into_iter()
        .filter_map(|x| x.finite())
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Serde adapters emitting rationals as `"p/q"` strings (integers as numbers).
pub mod rational_serde {
    use super::*;

    fn to_scalar(q: &Rational) -> TropScalar {
        TropScalar::Finite(q.clone())
    }

    fn from_scalar<E: de::Error>(x: TropScalar) -> std::result::Result<Rational, E> {
        x.into_finite()
            .ok_or_else(|| E::custom("expected a finite rational"))
    }

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        to_scalar(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        from_scalar(TropScalar::deserialize(d)?)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(
            v: &[Rational],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(to_scalar))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Rational>, D::Error> {
            Vec::<TropScalar>::deserialize(d)?
                .into_iter()
                .map(from_scalar)
                .collect()
        }
    }

    pub mod option_vec {
        use super::*;

        pub fn serialize<S: Serializer>(
            v: &Option<Vec<Rational>>,
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_seq(v.iter().map(to_scalar)),
                None => s.serialize_none(),
            }
        }
    }
}
