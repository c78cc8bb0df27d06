//! Serde adapters rendering exact rationals as `"p/q"` strings.

use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

use crate::polyring::{parse_rat, Rat};

pub fn serialize<S: Serializer>(q: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
    let text = String::deserialize(d)?;
    parse_rat(&text).ok_or_else(|| D::Error::custom(format!("not a rational: {text:?}")))
}

/// The same encoding for `Option<Rat>`, `null` for `None`.
pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&q.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        match Option::<String>::deserialize(d)? {
            Some(text) => parse_rat(&text)
                .map(Some)
                .ok_or_else(|| D::Error::custom(format!("not a rational: {text:?}"))),
            None => Ok(None),
        }
    }
}
