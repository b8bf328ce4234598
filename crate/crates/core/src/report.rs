//! Serde helpers for lossless JSON output of big integers.
//!
//! Values inside the signed 64-bit range are written as JSON numbers, larger
//! ones as decimal strings.

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(n) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&n.to_string()),
    }
}

pub fn bigint_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    struct Wrap<'a>(&'a BigInt);
    impl serde::Serialize for Wrap<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            bigint(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for n in v {
        seq.serialize_element(&Wrap(n))?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::Serialize;

    #[derive(Serialize)]
    struct Probe {
        #[serde(serialize_with = "bigint")]
        one: BigInt,
        #[serde(serialize_with = "bigint_vec")]
        many: Vec<BigInt>,
    }

    #[test]
    fn small_values_are_numbers_large_are_strings() {
        let big = BigInt::from(2).pow(120);
        let probe = Probe {
            one: BigInt::from(-47808),
            many: vec![BigInt::from(i64::MIN), big.clone()],
        };
        let json = serde_json::to_string(&probe).unwrap();
        assert_eq!(json, format!("{{\"one\":-47808,\"many\":[{},\"{}\"]}}", i64::MIN, big));
    }
}
