//! File formats.
//!
//! * Polynomial matrix: `{"d": 2, "entries": [[[0,1],[0,0,1]], [[0,0,1],[0,1]]]}`,
//!   row-major, each entry an ascending coefficient list. Coefficients are
//!   JSON integers or `"p/q"` strings (the entry must still be integer-valued).
//! * Point set: one point per line, comma-separated coordinates, each `p/q`
//!   (exact) or a decimal literal (float). Bare integers fit either kind.
//!   Blank lines and lines starting with `#` are ignored.
//! * Generators: JSON array of square integer matrices (arrays of rows).

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::exact::IntMat;
use crate::poly::{IntPoly, PolyMat};
use crate::serde_big::{int_from_json, int_to_json, rat_from_str, rat_to_string};
use crate::torus::{PointKind, TorusPointSet};
use crate::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn coefficient(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(_) => int_from_json(v)
            .map(BigRational::from_integer)
            .ok_or_else(|| parse_err(format!("coefficient {v} is not an integer"))),
        Value::String(s) => rat_from_str(s).ok_or_else(|| parse_err(format!("bad coefficient {s:?}"))),
        _ => Err(parse_err(format!("bad coefficient {v}"))),
    }
}

pub fn parse_polymat(text: &str) -> Result<PolyMat> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let d = v
        .get("d")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("missing positive integer field \"d\""))? as usize;
    if d == 0 {
        return Err(parse_err("d must be positive"));
    }
    let rows = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing array field \"entries\""))?;
    if rows.len() != d {
        return Err(parse_err(format!("expected {d} rows, found {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(d * d);
    for row in rows {
        let row = row.as_array().ok_or_else(|| parse_err("row is not an array"))?;
        if row.len() != d {
            return Err(parse_err(format!("expected {d} entries per row, found {}", row.len())));
        }
        for e in row {
            let coeffs = e
                .as_array()
                .ok_or_else(|| parse_err("entry is not a coefficient array"))?
                .iter()
                .map(coefficient)
                .collect::<Result<Vec<_>>>()?;
            entries.push(IntPoly::from_rationals(&coeffs)?);
        }
    }
    PolyMat::new(d, entries)
}

fn poly_json(p: &IntPoly) -> Value {
    match p.integer_coeffs() {
        Some(c) => Value::Array(c.iter().map(int_to_json).collect()),
        None => Value::Array(p.coeffs().iter().map(|c| Value::String(rat_to_string(c))).collect()),
    }
}

pub fn polymat_json(a: &PolyMat) -> Value {
    let d = a.dim();
    let entries: Vec<Value> = (0..d)
        .map(|i| Value::Array((0..d).map(|j| poly_json(a.entry(i, j))).collect()))
        .collect();
    json!({ "d": d, "entries": entries })
}

pub fn intmat_json(m: &IntMat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_to_json).collect()))
            .collect(),
    )
}

fn intmat_from_json(v: &Value) -> Result<IntMat> {
    let rows = v.as_array().ok_or_else(|| parse_err("matrix is not an array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| parse_err("row is not an array"))?
                .iter()
                .map(|x| int_from_json(x).ok_or_else(|| parse_err(format!("entry {x} is not an integer"))))
                .collect::<Result<Vec<BigInt>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    IntMat::from_big_rows(rows).map_err(|e| parse_err(e.to_string()))
}

pub fn parse_generators(text: &str) -> Result<Vec<IntMat>> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let list = v.as_array().ok_or_else(|| parse_err("expected a JSON array of matrices"))?;
    list.iter().map(intmat_from_json).collect()
}

pub fn parse_int_vector(text: &str) -> Result<Vec<BigInt>> {
    text.split(',')
        .map(|t| t.trim().parse::<BigInt>().map_err(|_| parse_err(format!("bad integer {t:?}"))))
        .collect()
}

enum Token {
    Exact(BigRational),
    Float(f64),
    Either(BigInt),
}

fn token(s: &str) -> Result<Token> {
    let s = s.trim();
    if s.contains('/') {
        return rat_from_str(s).map(Token::Exact).ok_or_else(|| parse_err(format!("bad rational {s:?}")));
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Ok(Token::Either(n));
    }
    s.parse::<f64>().map(Token::Float).map_err(|_| parse_err(format!("bad coordinate {s:?}")))
}

pub fn parse_points(text: &str) -> Result<TorusPointSet> {
    let mut rows: Vec<Vec<Token>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        rows.push(line.split(',').map(token).collect::<Result<_>>()?);
    }
    let dim = rows.first().map(Vec::len).ok_or_else(|| parse_err("no points"))?;
    let has = |f: fn(&Token) -> bool| rows.iter().flatten().any(f);
    let exact = has(|t| matches!(t, Token::Exact(_)));
    let float = has(|t| matches!(t, Token::Float(_)));
    if exact && float {
        return Err(parse_err("point file mixes exact and float coordinates"));
    }
    let set = if float {
        let pts = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|t| match t {
                        Token::Float(x) => x,
                        Token::Either(n) => n.to_string().parse().expect("integer literal"),
                        Token::Exact(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        TorusPointSet::float(dim, pts)
    } else {
        let pts = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|t| match t {
                        Token::Exact(x) => x,
                        Token::Either(n) => BigRational::from_integer(n),
                        Token::Float(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        TorusPointSet::exact(dim, pts)
    };
    set.map_err(|e| match e {
        Error::DimensionMismatch(m) => parse_err(m),
        other => other,
    })
}

pub fn format_points(y: &TorusPointSet) -> String {
    let mut out = String::new();
    match y.kind() {
        PointKind::Exact => {
            for p in y.exact_points().expect("exact") {
                let line: Vec<String> = p.iter().map(rat_to_string).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
        PointKind::Float => {
            for p in y.float_points().expect("float") {
                let line: Vec<String> = p.iter().map(|x| format!("{x:?}")).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn polymat_round_trip() {
        let a = fixtures::power_matrix();
        let text = polymat_json(&a).to_string();
        assert_eq!(text, r#"{"d":2,"entries":[[[0,1],[0,0,1]],[[0,0,0,1],[0,0,0,0,1]]]}"#);
        assert_eq!(parse_polymat(&text).unwrap(), a);
    }

    #[test]
    fn rational_entries() {
        let a = parse_polymat(r#"{"d":1,"entries":[[[0,"-1/2","1/2"]]]}"#).unwrap();
        assert!(!a.is_integral());
        assert_eq!(parse_polymat(&polymat_json(&a).to_string()).unwrap(), a);
        assert!(parse_polymat(r#"{"d":1,"entries":[[["1/2"]]]}"#).is_err());
        assert!(parse_polymat(r#"{"d":2,"entries":[[[1]]]}"#).is_err());
        assert!(parse_polymat("garbage").is_err());
    }

    #[test]
    fn points() {
        let y = parse_points("# tenths\n0, 1/2\n1/3,0\n").unwrap();
        assert_eq!(y.kind(), PointKind::Exact);
        assert_eq!(parse_points(&format_points(&y)).unwrap(), y);
        let f = parse_points("0.25\n0.5\n0\n").unwrap();
        assert_eq!(f.kind(), PointKind::Float);
        assert_eq!(parse_points(&format_points(&f)).unwrap(), f);
        assert!(parse_points("0.5\n1/3\n").is_err());
        assert!(parse_points("0.5,0.1\n0.3\n").is_err());
        assert!(parse_points("").is_err());
    }

    #[test]
    fn generators() {
        let g = parse_generators("[[[1,2],[0,1]],[[1,0],[2,1]]]").unwrap();
        assert_eq!(g, fixtures::sl2_even_pair().generators());
        assert!(parse_generators("[[[1,2],[0]]]").is_err());
    }
}
