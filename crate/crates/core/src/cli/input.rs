//! Generator-matrix files.
//!
//! ```text
//! # optional comments
//! q=4 n=4 k=2
//! 1 0 1 3
//! 0 1 2 2
//! ```
//!
//! `q` is the order of the field the entries live in. Rows may be linearly
//! dependent; the loaded code reports its true dimension.

use std::path::Path;
use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses `"1,1,1"` or `"1 1 1"` (low-to-high coefficients).
pub fn parse_modulus(text: &str) -> Result<Vec<u32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::InvalidModulus(format!("bad coefficient {t:?}")))
        })
        .collect()
}

fn header(line: &str, lineno: usize) -> Result<(u64, usize, usize)> {
    let mut q = None;
    let mut n = None;
    let mut k = None;
    for tok in line.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(lineno, format!("expected key=value, got {tok:?}")))?;
        let v: u64 = value.parse().map_err(|_| {
            parse_err(
                lineno,
                format!("{key} must be a nonnegative integer, got {value:?}"),
            )
        })?;
        let slot = match key {
            "q" => &mut q,
            "n" => &mut n,
            "k" => &mut k,
            _ => return Err(parse_err(lineno, format!("unknown header key {key:?}"))),
        };
        if slot.replace(v).is_some() {
            return Err(parse_err(lineno, format!("duplicate header key {key:?}")));
        }
    }
    match (q, n, k) {
        (Some(q), Some(n), Some(k)) => Ok((q, n as usize, k as usize)),
        _ => Err(parse_err(
            lineno,
            "header must be `q=<order> n=<length> k=<dim>`",
        )),
    }
}

/// Parses a code from file contents, optionally overriding the field's
/// defining polynomial.
pub fn parse_code(text: &str, modulus: Option<&[u32]>) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, htext) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (q, n, k) = header(htext, hline)?;
    let field: Arc<Field> = match modulus {
        None => Field::from_order(q).map_err(|e| parse_err(hline, e.to_string()))?,
        Some(m) => {
            let (p, _) = crate::field::prime_power(q)
                .ok_or_else(|| parse_err(hline, format!("q={q} is not a prime power")))?;
            let f = Field::new(p, m)?;
            if f.order() as u64 != q {
                return Err(Error::InvalidModulus(format!(
                    "modulus defines GF({}), header says q={q}",
                    f.order()
                )));
            }
            f
        }
    };
    let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(k);
    let mut last = hline;
    for (lineno, l) in lines {
        last = lineno;
        if rows.len() == k {
            return Err(parse_err(lineno, format!("more than k={k} rows")));
        }
        let row = l
            .split_whitespace()
            .map(|t| {
                let v: u64 = t
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("not an integer: {t:?}")))?;
                field
                    .element(v)
                    .map_err(|e| parse_err(lineno, e.to_string()))
            })
            .collect::<Result<Vec<Elem>>>()?;
        if row.len() != n {
            return Err(parse_err(
                lineno,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(parse_err(
            last,
            format!("expected k={k} rows, found {}", rows.len()),
        ));
    }
    LinearCode::from_vectors(&field, n, &rows)
}

pub fn load_code(path: &Path, modulus: Option<&[u32]>) -> Result<LinearCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))?;
    parse_code(&text, modulus)
}
