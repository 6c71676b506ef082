//! Exact big-integer conversion to and from JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Number, Value};

use crate::error::{Error, Result};

pub fn big_to_json(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal is a valid JSON number"))
}

pub fn json_to_big(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| Error::InvalidInput(format!("expected an integer, got {n}"))),
        other => Err(Error::InvalidInput(format!(
            "expected an integer, got {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_values_survive() {
        let v: BigInt = "123456789012345678901234567890".parse().unwrap();
        let text = serde_json::to_string(&big_to_json(&v)).unwrap();
        assert_eq!(text, "123456789012345678901234567890");
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(json_to_big(&back).unwrap(), v);
        assert!(json_to_big(&Value::from(1.5)).is_err());
    }
}
