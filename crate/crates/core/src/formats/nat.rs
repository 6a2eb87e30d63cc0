use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest integer every IEEE double represents exactly.
pub const MAX_PLAIN_INTEGER: u64 = (1 << 53) - 1;

/// A nonnegative integer that serializes as a JSON number when small enough
/// and as a decimal string otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nat(pub BigUint);

/// Signed counterpart of [`Nat`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Int(pub BigInt);

pub(crate) fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

impl From<u64> for Nat {
    fn from(v: u64) -> Self {
        Nat(BigUint::from(v))
    }
}

impl Serialize for Nat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) if v <= MAX_PLAIN_INTEGER => s.serialize_u64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.unsigned_abs() <= MAX_PLAIN_INTEGER => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct NatVisitor;

impl Visitor<'_> for NatVisitor {
    type Value = Nat;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a nonnegative integer or a string of decimal digits")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Nat, E> {
        Ok(Nat::from(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Nat, E> {
        u64::try_from(v).map(Nat::from).map_err(|_| E::custom(format!("negative entry {v}")))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Nat, E> {
        Err(E::custom(format!("{v} is not an exact integer; write large values as decimal strings")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Nat, E> {
        if v.starts_with('-') || !is_integer_literal(v) {
            return Err(E::custom(format!("{v:?} is not a nonnegative decimal integer")));
        }
        v.parse().map(Nat).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Nat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(NatVisitor)
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = Int;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a string of decimal digits")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Int, E> {
        Err(E::custom(format!("{v} is not an exact integer; write large values as decimal strings")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
        if !is_integer_literal(v) {
            return Err(E::custom(format!("{v:?} is not a decimal integer")));
        }
        v.parse().map(Int).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}
