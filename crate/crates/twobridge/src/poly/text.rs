//! Text and JSON forms for polynomials: `"4t^2-7t+4"`,
//! `{"var":"t","terms":[[2,4],[1,-7],[0,4]]}`, and the bivariate
//! `{"vars":["x","z"],"terms":[[i,j,c],...]}`.

use super::{BiPoly, IntPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::str::FromStr;

/// Render with descending exponents: `4t^2-7t+4`; zero renders as `0`.
pub fn format_poly(f: &IntPoly, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (exp, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push('-');
        } else {
            out.push('+');
        }
        let show_coeff = !mag.is_one() || exp == 0;
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        match exp {
            0 => {}
            1 => out.push_str(var),
            _ => {
                out.push_str(var);
                out.push('^');
                out.push_str(&exp.to_string());
            }
        }
    }
    out
}

/// Parse the syntax produced by `format_poly`; whitespace is ignored and
/// repeated exponents accumulate.
pub fn parse_poly(input: &str, var: &str) -> Result<IntPoly> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::InvalidInput("empty polynomial".into()));
    }
    let bad = |msg: &str| Error::InvalidInput(format!("cannot parse polynomial {input:?}: {msg}"));
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if !terms.is_empty() {
            return Err(bad("missing sign between terms"));
        }
        let digits_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff = if digits_start == i {
            BigInt::one()
        } else {
            BigInt::from_str(&s[digits_start..i]).map_err(|_| bad("bad coefficient"))?
        };
        let mut exp = 0usize;
        if s[i..].starts_with(var) {
            i += var.len();
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let e_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if e_start == i {
                    return Err(bad("missing exponent after ^"));
                }
                exp = s[e_start..i].parse().map_err(|_| bad("bad exponent"))?;
            }
        } else if digits_start == i {
            return Err(bad("expected coefficient or variable"));
        }
        terms.push((exp, sign * coeff));
    }
    let max_exp = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); max_exp + 1];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

fn coeff_value(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn coeff_from_value(v: &Value) -> Result<BigInt> {
    if let Some(n) = v.as_i64() {
        return Ok(BigInt::from(n));
    }
    if let Some(s) = v.as_str() {
        return BigInt::from_str(s)
            .map_err(|_| Error::InvalidInput(format!("bad coefficient {s:?}")));
    }
    Err(Error::InvalidInput(format!("bad coefficient {v}")))
}

/// `{"var":"t","terms":[[2,4],[1,-7],[0,4]]}` with descending exponents;
/// coefficients outside the i64 range are emitted as decimal strings.
pub fn poly_to_json(f: &IntPoly, var: &str) -> Value {
    let terms: Vec<Value> = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| json!([e, coeff_value(c)]))
        .collect();
    json!({ "var": var, "terms": terms })
}

/// Inverse of `poly_to_json`; returns the polynomial and its variable name.
pub fn poly_from_json(v: &Value) -> Result<(IntPoly, String)> {
    let var = v
        .get("var")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidInput("missing \"var\"".into()))?
        .to_string();
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidInput("missing \"terms\"".into()))?;
    let mut pairs: Vec<(usize, BigInt)> = Vec::with_capacity(terms.len());
    for t in terms {
        let pair = t
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::InvalidInput(format!("bad term {t}")))?;
        let e = pair[0]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput(format!("bad exponent {}", pair[0])))?;
        pairs.push((e as usize, coeff_from_value(&pair[1])?));
    }
    let max_exp = pairs.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); max_exp + 1];
    for (e, c) in pairs {
        coeffs[e] += c;
    }
    Ok((IntPoly::from_coeffs(coeffs), var))
}

/// `{"vars":["x","z"],"terms":[[i,j,c],...]}` in graded-lex order.
pub fn bipoly_to_json(f: &BiPoly) -> Value {
    let terms: Vec<Value> = f
        .terms_graded_lex()
        .into_iter()
        .map(|((i, j), c)| json!([i, j, coeff_value(&c)]))
        .collect();
    json!({ "vars": ["x", "z"], "terms": terms })
}

/// Inverse of `bipoly_to_json`.
pub fn bipoly_from_json(v: &Value) -> Result<BiPoly> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidInput("missing \"terms\"".into()))?;
    let mut out = BiPoly::zero();
    for t in terms {
        let triple = t
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Error::InvalidInput(format!("bad term {t}")))?;
        let i = triple[0]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput(format!("bad exponent {}", triple[0])))?;
        let j = triple[1]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput(format!("bad exponent {}", triple[1])))?;
        out.add_term(i as u32, j as u32, coeff_from_value(&triple[2])?);
    }
    Ok(out)
}
