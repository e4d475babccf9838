//! JSON encoding of lattices, embeddings, walls and fans.
//!
//! Integers are JSON numbers when they fit in an `i64` and decimal strings
//! otherwise; rationals and surds are always strings (`"p/q"`,
//! `"a+b*sqrt(d)"`). Object keys come out sorted.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use smallcones::cones::{FanRay, RayKind, Realizability, SmallConeFan, Wall, WallSource};
use smallcones::numeric::{parse_rational, IntMatrix, QuadraticSurd, Rational};
use smallcones::{Embedding, Lattice};

use crate::builtin::builtin_lattice;
use crate::CliError;

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints(r)).collect())
}

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn surd(x: &QuadraticSurd) -> Value {
    Value::String(x.to_string())
}

pub fn lattice(l: &Lattice) -> Value {
    let mut m = Map::new();
    m.insert("gram".into(), matrix(l.gram()));
    if let Some(label) = l.label() {
        m.insert("label".into(), Value::String(label.into()));
    }
    Value::Object(m)
}

pub fn embedding(e: &Embedding) -> Value {
    json!({
        "ambient": lattice(e.ambient()),
        "basis": Value::Array(e.basis().iter().map(|v| ints(v)).collect()),
        "domain": lattice(e.domain()),
    })
}

pub fn wall(w: &Wall) -> Value {
    let mut m = Map::new();
    m.insert("lambda".into(), ints(&w.lambda));
    m.insert("multiple".into(), int(&w.multiple));
    m.insert("norm".into(), rational(&w.norm));
    m.insert("source".into(), Value::String(w.source.as_str().into()));
    m.insert("realizability".into(), Value::String(w.realizability.as_str().into()));
    if let Realizability::Certified(beta) = &w.realizability {
        m.insert("witness".into(), ints(beta));
    }
    Value::Object(m)
}

pub fn ray(r: &FanRay) -> Value {
    json!({
        "coords": Value::Array(r.coords.iter().map(surd).collect()),
        "kind": r.kind.as_str(),
        "norm": rational(&r.norm),
    })
}

pub fn fan(f: &SmallConeFan) -> Value {
    json!({
        "cones": f.cone_count(),
        "lattice": lattice(f.lattice()),
        "rays": Value::Array(f.rays().iter().map(ray).collect()),
        "reference": ints(f.reference()),
        "walls": Value::Array(f.walls().iter().map(wall).collect()),
    })
}

fn flat(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.is_empty(),
        Value::Array(items) => items.iter().all(|x| !x.is_object() && !x.is_array()),
        _ => true,
    }
}

fn one_line(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(one_line).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, x)| format!("{}: {}", Value::String(k.clone()), one_line(x))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

/// Two-space indented JSON with keys in sorted order. Arrays of scalars
/// stay on one line, as do short objects with only such members.
pub fn write_pretty(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth + 1);
    let close = "  ".repeat(depth);
    if let Value::Object(m) = v {
        if m.values().all(flat) {
            let line = one_line(v);
            if line.len() + pad.len() <= 80 {
                out.push_str(&line);
                return;
            }
        }
    }
    match v {
        Value::Array(items) if !flat(v) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_pretty(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push(']');
        }
        Value::Array(_) => out.push_str(&one_line(v)),
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in m.iter().enumerate() {
                out.push_str(&format!("{pad}{}: ", Value::String(k.clone())));
                write_pretty(val, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

pub fn parse_int(v: &Value) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(format!("not an integer: {n}"))),
        Value::String(s) => s.trim().parse().map_err(|_| bad(format!("not an integer: {s:?}"))),
        other => Err(bad(format!("expected an integer, got {other}"))),
    }
}

pub fn parse_ints(v: &Value) -> Result<Vec<BigInt>, CliError> {
    v.as_array().ok_or_else(|| bad(format!("expected an array, got {v}")))?.iter().map(parse_int).collect()
}

pub fn parse_matrix(v: &Value) -> Result<Vec<Vec<BigInt>>, CliError> {
    v.as_array().ok_or_else(|| bad("expected an array of rows"))?.iter().map(parse_ints).collect()
}

pub fn parse_rational_value(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| bad(format!("not a rational: {s:?}"))),
        other => Ok(Rational::from_integer(parse_int(other)?)),
    }
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

/// A lattice object: `{"gram": [[..]], "label": ..}` or `{"builtin": name}`.
pub fn parse_lattice(v: &Value) -> Result<Lattice, CliError> {
    if let Some(name) = v.get("builtin") {
        let name = name.as_str().ok_or_else(|| bad("`builtin` must be a string"))?;
        return builtin_lattice(name);
    }
    let rows = parse_matrix(field(v, "gram")?)?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Domain(smallcones::Error::NotSquare));
    }
    let label = v.get("label").and_then(Value::as_str).map(String::from);
    Ok(Lattice::new(IntMatrix::from_rows(rows), label)?)
}

pub fn parse_embedding(v: &Value) -> Result<Embedding, CliError> {
    let domain = parse_lattice(field(v, "domain")?)?;
    let ambient = parse_lattice(field(v, "ambient")?)?;
    let basis = parse_matrix(field(v, "basis")?)?;
    if basis.iter().any(|b| b.len() != ambient.rank()) {
        return Err(bad("embedding basis vectors must have ambient rank"));
    }
    let m = IntMatrix::from_cols(ambient.rank(), &basis);
    Ok(Embedding::new(domain, ambient, m)?)
}

pub fn parse_wall(v: &Value) -> Result<Wall, CliError> {
    let source = match field(v, "source")?.as_str() {
        Some("internal-root") => WallSource::InternalRoot,
        Some("external") => WallSource::External,
        _ => return Err(bad("wall source must be `internal-root` or `external`")),
    };
    let realizability = match field(v, "realizability")?.as_str() {
        Some("assumed") => Realizability::Assumed,
        Some("refuted") => Realizability::Refuted,
        Some("certified") => Realizability::Certified(parse_ints(field(v, "witness")?)?),
        _ => return Err(bad("unknown realizability")),
    };
    Ok(Wall {
        lambda: parse_ints(field(v, "lambda")?)?,
        multiple: parse_int(field(v, "multiple")?)?,
        norm: parse_rational_value(field(v, "norm")?)?,
        source,
        realizability,
    })
}

fn parse_ray(v: &Value) -> Result<FanRay, CliError> {
    let coords = field(v, "coords")?
        .as_array()
        .ok_or_else(|| bad("ray coords must be an array"))?
        .iter()
        .map(|c| match c {
            Value::String(s) => s.parse::<QuadraticSurd>().map_err(|e| bad(e.0)),
            other => Ok(QuadraticSurd::from(&parse_int(other)?)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != 2 {
        return Err(bad("fan rays must have two coordinates"));
    }
    let kind = match field(v, "kind")?.as_str() {
        Some("boundary") => RayKind::Boundary,
        Some("region") => RayKind::Region,
        Some("wall") => RayKind::Wall,
        _ => return Err(bad("ray kind must be boundary, region or wall")),
    };
    Ok(FanRay { coords, kind, norm: parse_rational_value(field(v, "norm")?)? })
}

pub fn parse_fan(v: &Value) -> Result<SmallConeFan, CliError> {
    let l = parse_lattice(field(v, "lattice")?)?;
    let reference = parse_ints(field(v, "reference")?)?;
    let rays = field(v, "rays")?.as_array().ok_or_else(|| bad("`rays` must be an array"))?;
    let walls = field(v, "walls")?.as_array().ok_or_else(|| bad("`walls` must be an array"))?;
    let rays = rays.iter().map(parse_ray).collect::<Result<Vec<_>, _>>()?;
    let walls = walls.iter().map(parse_wall).collect::<Result<Vec<_>, _>>()?;
    Ok(SmallConeFan::from_parts(l, reference, rays, walls)?)
}
