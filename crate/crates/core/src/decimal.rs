//! Serializers writing arbitrary-precision integers as decimal strings.

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn one<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

pub fn vec<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}
