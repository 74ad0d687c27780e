//! Distances in `[0, ∞]` restricted to the integers.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A nonnegative integer or infinity.
///
/// Ordering is total with `Infinite` above every finite value, and
/// infinity absorbs addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedNat {
    Finite(u64),
    Infinite,
}

impl ExtendedNat {
    pub const ZERO: ExtendedNat = ExtendedNat::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinite => None,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(v: u64) -> Self {
        ExtendedNat::Finite(v)
    }
}

impl Add for ExtendedNat {
    type Output = ExtendedNat;

    fn add(self, rhs: ExtendedNat) -> ExtendedNat {
        match (self, rhs) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => {
                a.checked_add(b).map_or(ExtendedNat::Infinite, ExtendedNat::Finite)
            }
            _ => ExtendedNat::Infinite,
        }
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinite => f.write_str("inf"),
        }
    }
}

// JSON: finite values as integers, infinity as the string "inf".
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => s.serialize_u64(*v),
            ExtendedNat::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(ExtendedNat::Finite(v)),
            Raw::Str(s) if s == "inf" || s == "infinity" => Ok(ExtendedNat::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected integer or \"inf\", got {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs_addition() {
        assert_eq!(ExtendedNat::Infinite + 3.into(), ExtendedNat::Infinite);
        assert_eq!(ExtendedNat::from(2) + 3.into(), ExtendedNat::Finite(5));
        assert!(ExtendedNat::Finite(u64::MAX) < ExtendedNat::Infinite);
    }

    #[test]
    fn json_form() {
        let v = serde_json::to_string(&[ExtendedNat::Finite(2), ExtendedNat::Infinite]).unwrap();
        assert_eq!(v, r#"[2,"inf"]"#);
        let back: Vec<ExtendedNat> = serde_json::from_str(&v).unwrap();
        assert_eq!(back, vec![ExtendedNat::Finite(2), ExtendedNat::Infinite]);
    }
}
