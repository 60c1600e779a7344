//! Configuration files are JSON objects
//! `{ "field": "rationals" | {"prime": p}, "points": [[...], ...], "multiplicity": t? }`
//! with every coordinate an exact integer or an `"a/b"` string — floating
//! point is rejected outright. An empty point list lives in the plane.

use std::path::Path;

use fatpoints::{FieldSpec, PointConfiguration, ProjectivePoint, Scalar};
use num_bigint::BigInt;
use serde_json::Value;

use crate::CliError;

pub struct ParsedInput {
    pub config: PointConfiguration,
    /// The file's uniform multiplicity, if present; `dim` uses it as the
    /// default for `--t`, the sweeping commands choose their own range.
    pub multiplicity: Option<u32>,
}

fn bad(message: impl Into<String>) -> CliError {
    CliError::Input(message.into())
}

/// `--field` values: the literal "rationals" or a prime number.
pub fn parse_field_flag(text: &str) -> Result<FieldSpec, CliError> {
    if text == "rationals" {
        return Ok(FieldSpec::Rationals);
    }
    match text.parse::<u64>() {
        Ok(p) => FieldSpec::prime(p).map_err(|e| bad(e.to_string())),
        Err(_) => Err(bad(format!(
            "field must be \"rationals\" or a prime, got {text:?}"
        ))),
    }
}

fn parse_field_value(value: &Value) -> Result<FieldSpec, CliError> {
    match value {
        Value::String(s) if s == "rationals" => Ok(FieldSpec::Rationals),
        Value::Object(m) => {
            let p = m
                .get("prime")
                .filter(|_| m.len() == 1)
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("\"field\" object must be {\"prime\": p}"))?;
            FieldSpec::prime(p).map_err(|e| bad(e.to_string()))
        }
        _ => Err(bad(
            "\"field\" must be \"rationals\" or an object {\"prime\": p}",
        )),
    }
}

fn parse_fraction_text(field: FieldSpec, text: &str) -> Result<Scalar, CliError> {
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a, b),
        None => (text, "1"),
    };
    let parse = |part: &str| -> Result<BigInt, CliError> {
        part.parse()
            .map_err(|_| bad(format!("cannot parse coordinate {text:?}")))
    };
    Scalar::from_fraction(field, &parse(num)?, &parse(den)?).map_err(|e| bad(e.to_string()))
}

fn parse_scalar(field: FieldSpec, value: &Value) -> Result<Scalar, CliError> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_integer(field, i))
            } else if let Some(u) = n.as_u64() {
                Ok(Scalar::from_bigint(field, &BigInt::from(u)))
            } else {
                Err(bad("floating-point coordinates are not accepted; \
                     use integers or \"a/b\" strings"))
            }
        }
        Value::String(s) => parse_fraction_text(field, s),
        _ => Err(bad("coordinates must be integers or \"a/b\" strings")),
    }
}

pub fn read_config(path: &Path) -> Result<ParsedInput, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let object = value
        .as_object()
        .ok_or_else(|| bad("configuration must be a JSON object"))?;
    for key in object.keys() {
        if !matches!(key.as_str(), "field" | "points" | "multiplicity") {
            return Err(bad(format!(
                "unknown key {key:?} (expected \"field\", \"points\", \"multiplicity\")"
            )));
        }
    }

    let field = parse_field_value(
        object
            .get("field")
            .ok_or_else(|| bad("missing \"field\""))?,
    )?;
    let raw_points = object
        .get("points")
        .ok_or_else(|| bad("missing \"points\""))?
        .as_array()
        .ok_or_else(|| bad("\"points\" must be an array of coordinate arrays"))?;

    let mut points = Vec::with_capacity(raw_points.len());
    let mut width: Option<usize> = None;
    for (i, raw) in raw_points.iter().enumerate() {
        let coords = raw
            .as_array()
            .ok_or_else(|| bad(format!("point {i} must be a coordinate array")))?;
        if coords.len() < 2 {
            return Err(bad(format!("point {i} needs at least 2 coordinates")));
        }
        match width {
            None => width = Some(coords.len()),
            Some(w) if w != coords.len() => {
                return Err(bad("points have inconsistent coordinate counts"))
            }
            Some(_) => {}
        }
        let scalars = coords
            .iter()
            .map(|c| parse_scalar(field, c))
            .collect::<Result<Vec<_>, _>>()?;
        points.push(
            ProjectivePoint::new(field, scalars).map_err(|e| bad(format!("point {i}: {e}")))?,
        );
    }

    let config = match width {
        Some(w) => {
            PointConfiguration::simple(field, w - 1, points).map_err(|e| bad(e.to_string()))?
        }
        None => PointConfiguration::empty(field, 2),
    };

    let multiplicity = match object.get("multiplicity") {
        None => None,
        Some(v) => Some(
            v.as_u64()
                .filter(|&m| m >= 1 && m <= u64::from(u32::MAX))
                .map(|m| m as u32)
                .ok_or_else(|| bad("\"multiplicity\" must be a positive integer"))?,
        ),
    };

    Ok(ParsedInput {
        config,
        multiplicity,
    })
}
