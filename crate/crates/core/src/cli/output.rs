//! Aligned text tables and line-delimited JSON records.
//!
//! In records every rational is a `["num", "den"]` pair of decimal strings and
//! a weight is a list of such pairs, so values survive a round trip exactly.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{Rational, WeightVector};

pub fn rational_json(q: &Rational) -> Value {
    json!([q.numer().to_string(), q.denom().to_string()])
}

pub fn weight_json(v: &WeightVector) -> Value {
    Value::Array(v.coords().iter().map(rational_json).collect())
}

pub fn weights_json<'a>(vs: impl IntoIterator<Item = &'a WeightVector>) -> Value {
    Value::Array(vs.into_iter().map(weight_json).collect())
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let bad = || Error::Parse(format!("expected [\"num\", \"den\"], found {v}"));
    let pair = v.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
    let part = |x: &Value| -> Result<num::BigInt> { x.as_str().ok_or_else(bad)?.parse().map_err(|_| bad()) };
    let (n, d) = (part(&pair[0])?, part(&pair[1])?);
    if num::Zero::is_zero(&d) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn weight_from_json(v: &Value) -> Result<WeightVector> {
    let items = v.as_array().ok_or_else(|| Error::Parse(format!("expected a list of rationals, found {v}")))?;
    Ok(WeightVector::new(items.iter().map(rational_from_json).collect::<Result<_>>()?))
}

/// One JSON object per line, fields in insertion order.
#[derive(Default)]
pub struct Record(Map<String, Value>);

impl Record {
    pub fn new(kind: &str) -> Self {
        let mut m = Map::new();
        m.insert("record".into(), Value::String(kind.into()));
        Record(m)
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.into(), value.into());
        self
    }

    pub fn weight(self, key: &str, v: &WeightVector) -> Self {
        self.field(key, weight_json(v))
    }

    pub fn rational(self, key: &str, q: &Rational) -> Self {
        self.field(key, rational_json(q))
    }

    pub fn line(&self) -> String {
        serde_json::to_string(&self.0).expect("records serialize")
    }
}

/// Columns padded to the widest cell; the last column is left ragged.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let render = |cells: Vec<&str>| {
        let last = cells.len().saturating_sub(1);
        let mut line = String::new();
        for (i, c) in cells.into_iter().enumerate() {
            if i == last {
                line.push_str(c);
            } else {
                line.push_str(&format!("{c:<w$}  ", w = widths[i]));
            }
        }
        line.trim_end().to_string() + "\n"
    };
    let mut out = render(header.to_vec());
    for r in rows {
        out.push_str(&render(r.iter().map(String::as_str).collect()));
    }
    out
}
