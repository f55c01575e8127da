//! JSON encoding and decoding of the public data shapes.
//!
//! Input accepts two forms of isotropy data: a points list
//! `{"n": 1, "points": [{"j": 0, "sign": 1}, ...]}` or a multiplicity table
//! `{"n": 1, "m_plus": [...], "m_minus": [...]}`. The table form admits
//! arbitrarily large counts without materializing points. Output is always
//! the canonical points form, byte-stable: compact separators, fixed key
//! order, points ascending in `(j, sign)`.
//!
//! Decoding errors name the offending field (`points[3].sign: ...`), which
//! the CLI surfaces verbatim.

use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::Value;
use thiserror::Error;

use crate::bordism::BordismPolynomial;
use crate::data::{IsotropyData, KClass};
use crate::error::Error as DataError;
use crate::identities::IdentityReport;
use crate::realization::{NotRealizable, Witness};

/// Hard cap on the number of points listed by [`data_to_json`]; larger data
/// must be carried in multiplicity form.
pub const MAX_LISTED_POINTS: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),

    #[error("{path}: {message}")]
    Invalid { path: String, message: String },

    #[error("data has {count} points; points-form output is capped at {max}")]
    TooManyPoints { count: BigUint, max: u64 },
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> JsonError {
    JsonError::Invalid {
        path: path.into(),
        message: message.into(),
    }
}

/// Parses either accepted form of isotropy data.
pub fn data_from_json(text: &str) -> Result<IsotropyData, JsonError> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| invalid("$", "expected a JSON object"))?;

    for key in obj.keys() {
        if !matches!(key.as_str(), "n" | "points" | "m_plus" | "m_minus") {
            return Err(invalid(
                key,
                "unknown field (expected n with points, or n with m_plus and m_minus)",
            ));
        }
    }

    let n_value = obj
        .get("n")
        .ok_or_else(|| invalid("n", "missing required field"))?;
    let n = n_value
        .as_u64()
        .filter(|&n| n <= u32::MAX as u64)
        .ok_or_else(|| invalid("n", "expected a nonnegative integer"))? as u32;

    let has_points = obj.contains_key("points");
    let has_table = obj.contains_key("m_plus") || obj.contains_key("m_minus");
    match (has_points, has_table) {
        (true, true) => Err(invalid(
            "$",
            "points and m_plus/m_minus are mutually exclusive",
        )),
        (false, false) => Err(invalid(
            "$",
            "expected either points or m_plus and m_minus",
        )),
        (true, false) => parse_points_form(n, &obj["points"]),
        (false, true) => parse_table_form(n, obj),
    }
}

fn parse_points_form(n: u32, points: &Value) -> Result<IsotropyData, JsonError> {
    let array = points
        .as_array()
        .ok_or_else(|| invalid("points", "expected an array"))?;
    let mut pairs = Vec::with_capacity(array.len());
    for (i, entry) in array.iter().enumerate() {
        let obj = entry
            .as_object()
            .ok_or_else(|| invalid(format!("points[{i}]"), "expected an object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "j" | "sign") {
                return Err(invalid(
                    format!("points[{i}].{key}"),
                    "unknown field (expected j and sign)",
                ));
            }
        }
        let j = obj
            .get("j")
            .ok_or_else(|| invalid(format!("points[{i}].j"), "missing required field"))?
            .as_u64()
            .ok_or_else(|| invalid(format!("points[{i}].j"), "expected a nonnegative integer"))?;
        let sign = obj
            .get("sign")
            .ok_or_else(|| invalid(format!("points[{i}].sign"), "missing required field"))?
            .as_i64()
            .ok_or_else(|| invalid(format!("points[{i}].sign"), "expected 1 or -1"))?;
        pairs.push((j, sign));
    }
    IsotropyData::new(n, pairs).map_err(|e| match e {
        DataError::WeightOutOfRange { index, j, n } => invalid(
            format!("points[{index}].j"),
            format!("j = {j} out of range for n = {n}"),
        ),
        DataError::InvalidSign { index, value } => invalid(
            format!("points[{index}].sign"),
            format!("sign must be 1 or -1, got {value}"),
        ),
        other => invalid("points", other.to_string()),
    })
}

fn parse_table_form(
    n: u32,
    obj: &serde_json::Map<String, Value>,
) -> Result<IsotropyData, JsonError> {
    let m_plus = parse_count_vector(n, obj, "m_plus")?;
    let m_minus = parse_count_vector(n, obj, "m_minus")?;
    IsotropyData::from_multiplicities(n, &m_plus, &m_minus)
        .map_err(|e| invalid("$", e.to_string()))
}

fn parse_count_vector(
    n: u32,
    obj: &serde_json::Map<String, Value>,
    field: &str,
) -> Result<Vec<BigUint>, JsonError> {
    let value = obj
        .get(field)
        .ok_or_else(|| invalid(field, "missing required field"))?;
    let array = value
        .as_array()
        .ok_or_else(|| invalid(field, "expected an array"))?;
    let expected = n as usize + 1;
    if array.len() != expected {
        return Err(invalid(
            field,
            format!("must have n + 1 = {expected} entries, got {}", array.len()),
        ));
    }
    array
        .iter()
        .enumerate()
        .map(|(i, entry)| {
            let parsed = match entry {
                Value::Number(number) => BigUint::from_str(&number.to_string()).ok(),
                _ => None,
            };
            parsed.ok_or_else(|| {
                invalid(format!("{field}[{i}]"), "expected a nonnegative integer")
            })
        })
        .collect()
}

/// Canonical points-form encoding. Refuses to expand more than
/// [`MAX_LISTED_POINTS`] points.
pub fn data_to_json(d: &IsotropyData) -> Result<String, JsonError> {
    let count = d.point_count();
    if count > BigUint::from(MAX_LISTED_POINTS) {
        return Err(JsonError::TooManyPoints {
            count,
            max: MAX_LISTED_POINTS,
        });
    }
    let mut out = format!("{{\"n\":{},\"points\":[", d.n());
    let mut first = true;
    for (rep, sign, multiplicity) in d.support() {
        let copies = u64::try_from(multiplicity).expect("count fits after cap check");
        for _ in 0..copies {
            if !first {
                out.push(',');
            }
            first = false;
            out.push_str(&format!("{{\"j\":{},\"sign\":{}}}", rep.j(), sign.value()));
        }
    }
    out.push_str("]}");
    Ok(out)
}

/// `{"realizable":true,"n":..,"m0":..,"rep_spheres":[..]}`
pub fn witness_to_json(w: &Witness) -> String {
    let spheres: Vec<String> = w.rep_spheres().iter().map(|c| c.to_string()).collect();
    format!(
        "{{\"realizable\":true,\"n\":{},\"m0\":{},\"rep_spheres\":[{}]}}",
        w.n(),
        w.m0(),
        spheres.join(",")
    )
}

/// `{"realizable":false,"defects":[{"j":..,"residual":..},..]}`, ascending j.
pub fn not_realizable_to_json(nr: &NotRealizable) -> String {
    let defects: Vec<String> = nr
        .defects
        .iter()
        .map(|d| format!("{{\"j\":{},\"residual\":{}}}", d.j, d.residual))
        .collect();
    format!("{{\"realizable\":false,\"defects\":[{}]}}", defects.join(","))
}

/// `{"polynomial":[{"degree":..,"coeff":..},..]}`, ascending degree.
pub fn bordism_to_json(p: &BordismPolynomial) -> String {
    let terms: Vec<String> = p
        .terms()
        .map(|(degree, coeff)| format!("{{\"degree\":{degree},\"coeff\":{coeff}}}"))
        .collect();
    format!("{{\"polynomial\":[{}]}}", terms.join(","))
}

/// The term array `[{"t":..,"tbar":..,"coeff":..},..]`, ascending in
/// `(tbar, t)` so homogeneous classes list `j = tbar` in ascending order.
pub fn kclass_terms_json(k: &KClass) -> String {
    let mut keys: Vec<(u32, u32)> = k.terms().map(|(key, _)| key).collect();
    keys.sort_by_key(|&(t, tbar)| (tbar, t));
    let terms: Vec<String> = keys
        .iter()
        .map(|&(t, tbar)| {
            format!(
                "{{\"t\":{t},\"tbar\":{tbar},\"coeff\":{}}}",
                k.coefficient(t, tbar)
            )
        })
        .collect();
    format!("[{}]", terms.join(","))
}

/// Check report: verdict, residual table, and the multiplicity summary.
pub fn identity_report_json(d: &IsotropyData, report: &IdentityReport) -> String {
    let residuals: Vec<String> = report
        .residuals()
        .iter()
        .enumerate()
        .map(|(i, r)| format!("{{\"i\":{i},\"residual\":{r}}}"))
        .collect();
    let table = d.multiplicities();
    let fmt_counts = |counts: &[BigUint]| {
        counts
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let m: Vec<String> = table.m().iter().map(|v| v.to_string()).collect();
    format!(
        "{{\"n\":{},\"identities_hold\":{},\"residuals\":[{}],\"m_plus\":[{}],\"m_minus\":[{}],\"m\":[{}]}}",
        report.n(),
        report.satisfied(),
        residuals.join(","),
        fmt_counts(table.m_plus()),
        fmt_counts(table.m_minus()),
        m.join(",")
    )
}
