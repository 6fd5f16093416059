//! Serde adapters: big integers are serialized as decimal strings so that
//! artifacts round-trip bit-exactly regardless of platform word size.

pub mod biguint_str {
    use num::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let raw = String::deserialize(d)?;
        BigUint::from_str(&raw)
            .map_err(|e| de::Error::custom(format!("invalid decimal integer {raw:?}: {e}")))
    }
}

pub mod biguint_vec {
    use num::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|x| {
                BigUint::from_str(x)
                    .map_err(|e| de::Error::custom(format!("invalid decimal integer {x:?}: {e}")))
            })
            .collect()
    }
}
