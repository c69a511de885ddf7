//! JSON encoding for arbitrary-precision integers and exact rationals.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{Number, Value};

use crate::error::{Error, Result};

/// Integers are emitted as JSON numbers regardless of size.
pub fn bigint_to_json(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

pub fn serialize_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&bigint_to_json(x), s)
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            BigInt::from_str(&n.to_string()).map_err(|_| Error::Format(format!("expected an integer, found {n}")))
        }
        other => Err(Error::Format(format!("expected an integer, found {other}"))),
    }
}

/// Rationals serialize as `"p/q"` with `q > 0` and `gcd(p, q) = 1`; integers
/// still carry the `/1`.
pub fn rational_to_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn rational_from_str(s: &str) -> Result<BigRational> {
    let bad = || Error::Format(format!("expected a rational \"p/q\", found {s:?}"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

pub fn matrix_to_json(m: &[Vec<BigInt>]) -> Value {
    Value::Array(m.iter().map(|row| Value::Array(row.iter().map(bigint_to_json).collect())).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<Vec<Vec<BigInt>>> {
    let rows = v.as_array().ok_or_else(|| Error::Format("matrix must be an array of rows".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Format("matrix row must be an array".into()))?
                .iter()
                .map(bigint_from_json)
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_stay_numeric() {
        let x: BigInt = BigInt::from(7).pow(40);
        let v = bigint_to_json(&x);
        assert!(v.is_number());
        assert_eq!(bigint_from_json(&v).unwrap(), x);
        assert_eq!(serde_json::to_string(&v).unwrap(), x.to_string());
    }

    #[test]
    fn rational_format() {
        let r = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(rational_from_str("-3/2").unwrap(), r);
        assert_eq!(rational_from_str("5").unwrap(), BigRational::from_integer(5.into()));
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("x").is_err());
    }
}
