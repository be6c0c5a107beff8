//! JSON document encoding. Rationals are strings (`"p/q"` or `"p"`);
//! integers are accepted on input. Matrices are arrays of rows.

use serde_json::{json, Value};

use crate::classes::{ClassLabel, ClassPair};
use crate::error::LieError;
use crate::lie::{Family, LieAlgebraSpec, LieElement, Sl2Triple};
use crate::linalg::rational;
use crate::linalg::{Rational, RationalMatrix};
use crate::roots::Partition;

/// A document that does not have the expected shape.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed input: {0}")]
pub struct Malformed(pub String);

pub type ParseResult<T> = std::result::Result<T, Malformed>;

fn bad<T>(msg: impl Into<String>) -> ParseResult<T> {
    Err(Malformed(msg.into()))
}

pub fn parse_rational(v: &Value) -> ParseResult<Rational> {
    match v {
        Value::String(s) => rational::parse(s).ok_or_else(|| Malformed(format!("not a rational: {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().unwrap())),
        Value::Number(n) => bad(format!("{n} is not an integer; write fractions as \"p/q\" strings")),
        other => bad(format!("expected a rational, found {other}")),
    }
}

pub fn emit_rational(r: &Rational) -> Value {
    Value::String(rational::format(r))
}

pub fn parse_vector(v: &Value) -> ParseResult<Vec<Rational>> {
    match v {
        Value::Array(items) => items.iter().map(parse_rational).collect(),
        other => bad(format!("expected an array, found {other}")),
    }
}

pub fn emit_vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(emit_rational).collect())
}

pub fn parse_matrix(v: &Value) -> ParseResult<RationalMatrix> {
    let Value::Array(rows) = v else {
        return bad("matrix must be an array of rows");
    };
    let rows = rows.iter().map(parse_vector).collect::<ParseResult<Vec<_>>>()?;
    if rows.is_empty() {
        return bad("empty matrix");
    }
    RationalMatrix::from_rows(rows).map_err(|e| Malformed(e.to_string()))
}

pub fn emit_matrix(m: &RationalMatrix) -> Value {
    serde_json::to_value(m).expect("matrices serialize")
}

pub fn parse_family(s: &str) -> ParseResult<Family> {
    s.parse().map_err(|e: LieError| Malformed(e.to_string()))
}

/// `"gl_3"`, `"sl_2"`, or `{"family": "gl", "n": 3}`.
pub fn parse_algebra(v: &Value) -> ParseResult<LieAlgebraSpec> {
    let (family, n) = match v {
        Value::String(s) => {
            let Some((f, n)) = s.split_once('_') else {
                return bad(format!("algebra {s:?} is not of the form gl_n or sl_n"));
            };
            (parse_family(f)?, n.parse::<usize>().map_err(|_| Malformed(format!("bad rank in {s:?}")))?)
        }
        Value::Object(_) => {
            let spec: LieAlgebraSpec = serde_json::from_value(v.clone()).map_err(|e| Malformed(e.to_string()))?;
            (spec.family, spec.n)
        }
        other => return bad(format!("expected an algebra, found {other}")),
    };
    LieAlgebraSpec::new(family, n).map_err(|e| Malformed(e.to_string()))
}

pub fn emit_algebra(g: LieAlgebraSpec) -> Value {
    Value::String(g.name())
}

pub fn emit_partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn parse_partition(v: &Value) -> ParseResult<Partition> {
    let parts: Vec<usize> = serde_json::from_value(v.clone()).map_err(|e| Malformed(format!("partition: {e}")))?;
    Partition::new(parts).map_err(|e| Malformed(e.to_string()))
}

/// Sorted array of `{size, partition}` records.
pub fn emit_label(label: &ClassLabel) -> Value {
    Value::Array(
        label
            .pairs()
            .iter()
            .map(|p| json!({"size": p.size, "partition": p.partition.parts()}))
            .collect(),
    )
}

pub fn parse_label(algebra: LieAlgebraSpec, v: &Value) -> ParseResult<ClassLabel> {
    let Value::Array(items) = v else {
        return bad("label must be an array of {size, partition} records");
    };
    let pairs = items
        .iter()
        .map(|item| {
            let size = item.get("size").and_then(Value::as_u64).ok_or_else(|| Malformed("pair without size".into()))?;
            let partition = parse_partition(item.get("partition").ok_or_else(|| Malformed("pair without partition".into()))?)?;
            Ok(ClassPair { size: size as usize, partition })
        })
        .collect::<ParseResult<Vec<_>>>()?;
    ClassLabel::new(algebra, pairs).map_err(|e| Malformed(e.to_string()))
}

/// The matrix under `key`, tagged with `family` (gl unless stated). A
/// bare array is accepted as the whole document.
pub fn element_field(doc: &Value, key: &str, family: Family) -> ParseResult<LieElement> {
    let raw = match doc {
        Value::Array(_) if key == "matrix" => doc,
        _ => doc.get(key).ok_or_else(|| Malformed(format!("missing field {key:?}")))?,
    };
    let m = parse_matrix(raw)?;
    if !m.is_square() {
        return bad(format!("{key} is {}x{}, not square", m.rows(), m.cols()));
    }
    let algebra = LieAlgebraSpec::new(family, m.rows()).map_err(|e| Malformed(e.to_string()))?;
    LieElement::new(algebra, m).map_err(|e| Malformed(e.to_string()))
}

pub fn emit_triple(t: &Sl2Triple) -> Value {
    json!({"e": emit_matrix(t.e.matrix()), "h": emit_matrix(t.h.matrix()), "f": emit_matrix(t.f.matrix())})
}

pub fn parse_triple(v: &Value, family: Family) -> ParseResult<(LieElement, LieElement, LieElement)> {
    Ok((element_field(v, "e", family)?, element_field(v, "h", family)?, element_field(v, "f", family)?))
}

pub fn emit_error(e: &LieError) -> Value {
    let mut record = json!({"kind": e.kind(), "message": e.to_string()});
    if let LieError::IrrationalSpectrum { factor } = e {
        record["factor"] = Value::String(factor.clone());
    }
    record
}
