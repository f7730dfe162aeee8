//! Multiset input and rational formatting.
//!
//! A multiset file is either a JSON array whose entries are integers or
//! strings `"num/den"` (or integer strings), or plain text with one such
//! value per line. Blank lines and lines starting with `#` are skipped in the
//! text form.

use crate::error::{Error, Result};
use crate::symfun::NumberMultiset;
use crate::Rational;

pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let parsed: Option<Rational> = match t.split_once('/') {
        Some((num, den)) => {
            let num = num.trim().parse().ok();
            let den: Option<num_bigint::BigInt> = den.trim().parse().ok();
            match (num, den) {
                (Some(n), Some(d)) if d != num_bigint::BigInt::from(0) => Some(Rational::new(n, d)),
                _ => None,
            }
        }
        None => t.parse().ok().map(Rational::from_integer),
    };
    parsed.ok_or_else(|| Error::Parse(format!("not a rational literal: {text:?}")))
}

pub fn parse_multiset(text: &str) -> Result<NumberMultiset> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let values: Vec<serde_json::Value> =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Vec::with_capacity(values.len());
        for v in values {
            let r = match &v {
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => {
                    parse_rational(&n.to_string())?
                }
                serde_json::Value::String(s) => parse_rational(s)?,
                other => return Err(Error::Parse(format!("unsupported multiset entry {other}"))),
            };
            out.push(r);
        }
        return Ok(NumberMultiset::new(out));
    }
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_rational(line)?);
    }
    Ok(NumberMultiset::new(out))
}
