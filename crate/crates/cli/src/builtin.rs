//! Named lattices and small argument grammars.

use num_bigint::BigInt;
use smallcones::numeric::{IntMatrix, QuadraticSurd};
use smallcones::{AdeType, Lattice};

use crate::CliError;

/// `U`, `U(n)`, `E8`, `K3`, `pell(n,d)`, `<k>` for the rank-1 lattice
/// `[[k]]`, or an ADE symbol such as `A1+A2` (negative definite).
pub fn builtin_lattice(name: &str) -> Result<Lattice, CliError> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let args = |inner: &str| -> Result<Vec<i64>, CliError> {
        inner
            .split(',')
            .map(|x| x.parse::<i64>().map_err(|_| CliError::Parse(format!("bad builtin lattice `{name}`"))))
            .collect()
    };
    let lower = s.to_ascii_lowercase();
    if lower == "u" {
        return Ok(Lattice::u());
    }
    if lower == "k3" {
        return Ok(Lattice::k3());
    }
    if lower == "e8" {
        return Ok(Lattice::e8());
    }
    if let Some(inner) = lower.strip_prefix("u(").and_then(|r| r.strip_suffix(')')) {
        let a = args(inner)?;
        return match a.as_slice() {
            [n] => Ok(Lattice::u_scaled(*n)?),
            _ => Err(CliError::Parse(format!("bad builtin lattice `{name}`"))),
        };
    }
    if let Some(inner) = lower.strip_prefix("pell(").and_then(|r| r.strip_suffix(')')) {
        let a = args(inner)?;
        return match a.as_slice() {
            [n, d] => Ok(Lattice::pell(*n, *d)?),
            _ => Err(CliError::Parse(format!("bad builtin lattice `{name}`"))),
        };
    }
    if let Some(inner) = s.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
        let a = args(inner)?;
        return match a.as_slice() {
            [k] => Ok(Lattice::new(IntMatrix::from_i64(&[&[*k]]), Some(format!("<{k}>")))?),
            _ => Err(CliError::Parse(format!("bad builtin lattice `{name}`"))),
        };
    }
    let t: AdeType = s.parse().map_err(|_| CliError::Parse(format!("unknown builtin lattice `{name}`")))?;
    Ok(Lattice::ade(&t).with_label(t.to_string()))
}

/// `1,0` or `-2, 3`.
pub fn parse_vector(s: &str) -> Result<Vec<BigInt>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<BigInt>().map_err(|_| CliError::Parse(format!("bad integer vector `{s}`"))))
        .collect()
}

/// Comma-separated surds, e.g. `1+1*sqrt(2),1`.
pub fn parse_surd_vector(s: &str) -> Result<Vec<QuadraticSurd>, CliError> {
    s.split(',').map(|x| x.trim().parse::<QuadraticSurd>().map_err(|e| CliError::Parse(e.0))).collect()
}

/// Rows separated by `;`, e.g. `3,4;2,3`.
pub fn parse_int_matrix(s: &str) -> Result<IntMatrix, CliError> {
    let rows = s.split(';').map(parse_vector).collect::<Result<Vec<_>, _>>()?;
    let n = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Parse(format!("ragged matrix `{s}`")));
    }
    Ok(IntMatrix::from_rows(rows))
}
