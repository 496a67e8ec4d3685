//! Serde support for arbitrary-precision integers in text documents.
//!
//! Values that fit in an `i64` are written as plain numbers; larger values
//! are written as decimal strings. Both forms are accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Small(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Small(v) => Ok(Int(BigInt::from(v))),
            Raw::Text(s) => BigInt::from_str(s.trim()).map(Int).map_err(de::Error::custom),
        }
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Int> = v.iter().cloned().map(Int).collect();
        wrapped.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<Int>::deserialize(deserializer)?.into_iter().map(|i| i.0).collect())
    }
}

pub mod rows {
    use super::*;

    pub fn serialize<S: Serializer>(rows: &[Vec<BigInt>], serializer: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().cloned().map(Int).collect()).collect();
        wrapped.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let raw = Vec::<Vec<Int>>::deserialize(deserializer)?;
        Ok(raw.into_iter().map(|r| r.into_iter().map(|i| i.0).collect()).collect())
    }
}

pub mod matrix {
    use super::*;
    use crate::matrix::IntMatrix;

    pub fn serialize<S: Serializer>(m: &IntMatrix, serializer: S) -> Result<S::Ok, S::Error> {
        super::rows::serialize(&m.to_rows(), serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<IntMatrix, D::Error> {
        let rows = super::rows::deserialize(deserializer)?;
        IntMatrix::from_rows(rows).map_err(de::Error::custom)
    }
}
