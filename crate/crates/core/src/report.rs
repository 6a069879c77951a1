//! Identity reports and the decimal-string serde helpers used by every
//! JSON-facing type.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::ExactInt;

/// Both sides of one checked identity, plus the intermediate values that
/// produced them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    #[serde(with = "decimal")]
    pub lhs: ExactInt,
    #[serde(with = "decimal")]
    pub rhs: ExactInt,
    pub holds: bool,
    #[serde(with = "decimal_map")]
    pub context: BTreeMap<String, ExactInt>,
}

impl IdentityReport {
    pub fn new(name: &str, lhs: ExactInt, rhs: ExactInt) -> Self {
        let holds = lhs == rhs;
        IdentityReport {
            name: name.to_string(),
            lhs,
            rhs,
            holds,
            context: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<ExactInt>) -> Self {
        self.context.insert(key.to_string(), value.into());
        self
    }
}

pub(crate) mod decimal {
    use super::ExactInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom(format!("not a decimal integer: {s:?}")))
    }
}

pub(crate) mod decimal_vec {
    use super::ExactInt;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[ExactInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<ExactInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(|_| D::Error::custom(format!("not a decimal integer: {s:?}"))))
            .collect()
    }
}

pub(crate) mod decimal_map {
    use std::collections::BTreeMap;

    use super::ExactInt;
    use serde::{de::Error, ser::SerializeMap, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        v: &BTreeMap<String, ExactInt>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(v.len()))?;
        for (k, x) in v {
            map.serialize_entry(k, &x.to_string())?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<String, ExactInt>, D::Error> {
        BTreeMap::<String, String>::deserialize(d)?
            .into_iter()
            .map(|(k, s)| {
                s.parse()
                    .map(|x| (k, x))
                    .map_err(|_| D::Error::custom(format!("not a decimal integer: {s:?}")))
            })
            .collect()
    }
}
