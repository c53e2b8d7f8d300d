use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{Format, MultiMatrix, PointTuple};
use crate::polyalg::{format_rational, parse_rational, Rational};
use crate::{Error, Result};

/// One serialized rational: a JSON integer or a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryValue {
    Int(i64),
    Text(String),
}

impl EntryValue {
    pub fn from_rational(q: &Rational) -> Self {
        if q.denom().is_one() {
            if let Some(v) = q.numer().to_i64() {
                return EntryValue::Int(v);
            }
        }
        EntryValue::Text(format_rational(q))
    }

    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            EntryValue::Int(v) => Ok(Rational::from_integer(BigInt::from(*v))),
            EntryValue::Text(s) => parse_rational(s),
        }
    }
}

/// `{"format": [d0, …, dp], "entries": [...]}`, row-major, last axis fastest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDocument {
    pub format: Vec<usize>,
    pub entries: Vec<EntryValue>,
}

impl TensorDocument {
    pub fn from_tensor(a: &MultiMatrix) -> Self {
        TensorDocument {
            format: a.dims().to_vec(),
            entries: a.entries().iter().map(EntryValue::from_rational).collect(),
        }
    }

    pub fn to_tensor(&self) -> Result<MultiMatrix> {
        let format = Format::new(self.format.clone())?;
        let entries = self
            .entries
            .iter()
            .map(EntryValue::to_rational)
            .collect::<Result<Vec<_>>>()?;
        MultiMatrix::new(format, entries)
    }

    pub fn parse(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

impl MultiMatrix {
    pub fn from_json(src: &str) -> Result<Self> {
        TensorDocument::parse(src)?.to_tensor()
    }

    pub fn to_json(&self) -> String {
        TensorDocument::from_tensor(self).to_json()
    }
}

/// `{"vectors": [[...], ...]}`: a kernel certificate `x^0, …, x^p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDocument {
    pub vectors: Vec<Vec<EntryValue>>,
}

impl PointDocument {
    pub fn from_points(x: &PointTuple) -> Self {
        PointDocument {
            vectors: x
                .vectors
                .iter()
                .map(|v| v.iter().map(EntryValue::from_rational).collect())
                .collect(),
        }
    }

    pub fn to_points(&self) -> Result<PointTuple> {
        let vectors = self
            .vectors
            .iter()
            .map(|v| v.iter().map(EntryValue::to_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(PointTuple::new(vectors))
    }

    pub fn parse(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn reads_integers_and_fractions() {
        let a = MultiMatrix::from_json(r#"{"format":[2,2],"entries":[1,"-3/6","7",0]}"#).unwrap();
        assert_eq!(a.entries(), &[rat(1), ratio(-1, 2), rat(7), rat(0)]);
        assert_eq!(a.to_json(), r#"{"format":[2,2],"entries":[1,"-1/2",7,0]}"#);
    }

    #[test]
    fn rejects_bad_documents() {
        for src in [
            r#"{"format":[2,2],"entries":[1,2,3]}"#,
            r#"{"format":[2,0],"entries":[]}"#,
            r#"{"format":[2],"entries":[1,"1/0"]}"#,
            r#"{"format":[2],"entries":[1,2.5]}"#,
            r#"{"format":[2],"entries":[1,2],"extra":1}"#,
            "not json",
        ] {
            assert!(MultiMatrix::from_json(src).is_err(), "{src}");
        }
    }

    #[test]
    fn large_values_become_strings() {
        let big = Rational::from_integer(BigInt::from(i64::MAX) * 4);
        let a = MultiMatrix::new(Format::new(vec![1, 2]).unwrap(), vec![big.clone(), ratio(5, 3)]).unwrap();
        let json = a.to_json();
        assert!(json.contains("\"36893488147419103228\""));
        assert_eq!(MultiMatrix::from_json(&json).unwrap(), a);
    }

    #[test]
    fn point_documents() {
        let x = PointDocument::parse(r#"{"vectors":[[1,0],["1/2",3]]}"#).unwrap().to_points().unwrap();
        assert_eq!(x, PointTuple::new(vec![vec![rat(1), rat(0)], vec![ratio(1, 2), rat(3)]]));
        assert_eq!(PointDocument::from_points(&x).to_json(), r#"{"vectors":[[1,0],["1/2",3]]}"#);
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(
            dims in proptest::collection::vec(1usize..4, 2..4),
            seed in proptest::collection::vec((any::<i64>(), 1i64..1000), 27..=27),
        ) {
            let n: usize = dims.iter().product();
            let entries: Vec<Rational> = seed[..n]
                .iter()
                .map(|&(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
                .collect();
            let a = MultiMatrix::new(Format::new(dims).unwrap(), entries).unwrap();
            let first = a.to_json();
            let back = MultiMatrix::from_json(&first).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_json(), first);
        }
    }
}
