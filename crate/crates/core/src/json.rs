//! JSON encodings.
//!
//! Walks are arrays of labels, forests are arrays of walks, tensors are
//! `{"factors": [forest, ...]}` (a walk factor is written as a one-walk
//! forest), and linear combinations are arrays of `{"coeff", "term"}` with
//! the coefficient as an exact `"p/q"` string, in basis order.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forest::{Forest, MultisetForest};
use crate::lincomb::{Coeff, LinComb};
use crate::walk::Walk;

pub trait JsonTerm: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn parse_err(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, found {v}"))
}

fn decode<T: serde::de::DeserializeOwned>(what: &str, v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|_| parse_err(what, v))
}

impl JsonTerm for Walk {
    fn to_json(&self) -> Value {
        json!(self.labels())
    }

    fn from_json(v: &Value) -> Result<Self> {
        decode("a nonempty array of labels", v)
    }
}

impl JsonTerm for Forest {
    fn to_json(&self) -> Value {
        Value::Array(self.walks().iter().map(Walk::to_json).collect())
    }

    fn from_json(v: &Value) -> Result<Self> {
        decode("an array of walks", v)
    }
}

impl JsonTerm for MultisetForest {
    fn to_json(&self) -> Value {
        Value::Array(self.walks().iter().map(Walk::to_json).collect())
    }

    fn from_json(v: &Value) -> Result<Self> {
        decode("an array of walks", v)
    }
}

/// A tensor factor: anything that can be viewed as a forest.
pub trait Factor: Sized {
    fn as_forest_json(&self) -> Value;
    fn from_forest_json(v: &Value) -> Result<Self>;
}

impl Factor for Forest {
    fn as_forest_json(&self) -> Value {
        self.to_json()
    }

    fn from_forest_json(v: &Value) -> Result<Self> {
        Forest::from_json(v)
    }
}

impl Factor for MultisetForest {
    fn as_forest_json(&self) -> Value {
        self.to_json()
    }

    fn from_forest_json(v: &Value) -> Result<Self> {
        MultisetForest::from_json(v)
    }
}

impl Factor for Walk {
    fn as_forest_json(&self) -> Value {
        json!([self.to_json()])
    }

    fn from_forest_json(v: &Value) -> Result<Self> {
        let f = Forest::from_json(v)?;
        match f.walks() {
            [w] => Ok(w.clone()),
            _ => Err(parse_err("a single-walk forest", v)),
        }
    }
}

fn factors(v: &Value, n: usize) -> Result<&[Value]> {
    match v.get("factors").and_then(Value::as_array) {
        Some(fs) if fs.len() == n => Ok(fs),
        _ => Err(parse_err(&format!("a tensor with {n} factors"), v)),
    }
}

impl<A: Factor, B: Factor> JsonTerm for (A, B) {
    fn to_json(&self) -> Value {
        json!({ "factors": [self.0.as_forest_json(), self.1.as_forest_json()] })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let fs = factors(v, 2)?;
        Ok((A::from_forest_json(&fs[0])?, B::from_forest_json(&fs[1])?))
    }
}

impl<A: Factor, B: Factor, C: Factor> JsonTerm for (A, B, C) {
    fn to_json(&self) -> Value {
        json!({
            "factors": [
                self.0.as_forest_json(),
                self.1.as_forest_json(),
                self.2.as_forest_json()
            ]
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let fs = factors(v, 3)?;
        Ok((
            A::from_forest_json(&fs[0])?,
            B::from_forest_json(&fs[1])?,
            C::from_forest_json(&fs[2])?,
        ))
    }
}

impl<B: JsonTerm + Ord + Clone> JsonTerm for LinComb<B> {
    fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .map(|(b, c)| json!({ "coeff": c.to_string(), "term": b.to_json() }))
                .collect(),
        )
    }

    fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .ok_or_else(|| parse_err("an array of terms", v))?;
        let mut out = LinComb::zero();
        for item in items {
            let c = item
                .get("coeff")
                .and_then(Value::as_str)
                .and_then(|s| Coeff::from_str(s).ok())
                .ok_or_else(|| parse_err("a rational \"coeff\" string", item))?;
            let t = item
                .get("term")
                .ok_or_else(|| parse_err("a \"term\"", item))?;
            out.add_term(B::from_json(t)?, c);
        }
        Ok(out)
    }
}
