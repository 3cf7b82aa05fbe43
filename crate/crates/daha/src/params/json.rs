//! JSON forms of parameter-field values.

use serde_json::{json, Value};

use super::cyclotomic::{CycNumber, Rat};
use super::monomial::ParamMonomial;
use super::poly::{Coeff, ParamPoly, Poly};
use super::scalar::ParamScalar;
use super::spec::{spec_branch, Family, SpecPoly, SpecValue};
use crate::error::{DahaError, Result};

fn bad(what: &str) -> DahaError {
    DahaError::Parse(format!("malformed {}", what))
}

pub fn cyc_to_json(c: &CycNumber) -> Value {
    json!({"N": c.modulus(), "c": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>()})
}

pub fn cyc_from_json(v: &Value) -> Result<CycNumber> {
    let n = v.get("N").and_then(Value::as_u64).ok_or_else(|| bad("cyclotomic number"))? as u32;
    let c = v
        .get("c")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("cyclotomic number"))?
        .iter()
        .map(|x| x.as_str().and_then(|s| s.parse::<Rat>().ok()).ok_or_else(|| bad("rational")))
        .collect::<Result<Vec<_>>>()?;
    Ok(CycNumber::from_coeffs(n, c))
}

pub fn poly_to_json<C: Coeff>(p: &Poly<C>) -> Value {
    Value::Array(p.terms().iter().map(|(m, c)| json!([m.0.to_vec(), cyc_to_json(&c.to_cyc())])).collect())
}

fn monomial_from_json(v: &Value) -> Result<ParamMonomial> {
    let a = v.as_array().filter(|a| a.len() == 6).ok_or_else(|| bad("exponent vector"))?;
    let mut m = [0i32; 6];
    for (k, x) in a.iter().enumerate() {
        m[k] = x.as_i64().ok_or_else(|| bad("exponent"))? as i32;
    }
    Ok(ParamMonomial(m))
}

/// Reads a polynomial; coefficients must be rational.
pub fn param_poly_from_json(v: &Value) -> Result<ParamPoly> {
    let terms = v.as_array().ok_or_else(|| bad("polynomial"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term"))?;
        let m = monomial_from_json(&pair[0])?;
        let c = cyc_from_json(&pair[1])?.as_rat().ok_or_else(|| bad("rational coefficient"))?;
        out.push((m, c));
    }
    Ok(ParamPoly::from_terms(out))
}

pub fn scalar_to_json(s: &ParamScalar) -> Value {
    let (num, den) = s.to_fraction();
    json!({"num": poly_to_json(&num), "den": poly_to_json(&den)})
}

pub fn scalar_from_json(v: &Value) -> Result<ParamScalar> {
    let num = param_poly_from_json(v.get("num").ok_or_else(|| bad("scalar"))?)?;
    let den = param_poly_from_json(v.get("den").ok_or_else(|| bad("scalar"))?)?;
    if den.is_zero() {
        return Err(bad("scalar (zero denominator)"));
    }
    Ok(ParamScalar::from_fraction(&num, &den))
}

pub fn spec_value_to_json(s: &SpecValue) -> Value {
    json!({"num": poly_to_json(&s.num), "den": poly_to_json(&s.den)})
}

pub fn spec_to_json(s: &SpecPoly) -> Value {
    let (k, r, i, sign) = match s.family {
        Family::Tq { k, r } | Family::Aa { k, r } => (Some(k), r, None, None),
        Family::Ab { i, r, plus } | Family::Ac { i, r, plus } | Family::Ad { i, r, plus } => {
            (None, r, Some(i), Some(if plus { "+" } else { "-" }))
        }
    };
    json!({
        "family": s.family.name(),
        "n": s.n,
        "k": k,
        "r": r,
        "i": i,
        "sign": sign,
        "v": s.v.0.to_vec(),
        "omega": s.omega.to_string(),
        "omega_index": s.branch,
    })
}

pub fn spec_from_json(v: &Value) -> Result<SpecPoly> {
    let get = |k: &str| v.get(k).and_then(Value::as_i64);
    let fam = v.get("family").and_then(Value::as_str).ok_or_else(|| bad("family"))?;
    let n = get("n").ok_or_else(|| bad("n"))? as usize;
    let r = get("r").ok_or_else(|| bad("r"))? as i32;
    let plus = v.get("sign").and_then(Value::as_str) != Some("-");
    let family = match fam {
        "tq" => Family::Tq { k: get("k").ok_or_else(|| bad("k"))? as i32, r },
        "aa" => Family::Aa { k: get("k").ok_or_else(|| bad("k"))? as i32, r },
        "ab" => Family::Ab { i: get("i").ok_or_else(|| bad("i"))? as i32, r, plus },
        "ac" => Family::Ac { i: get("i").ok_or_else(|| bad("i"))? as i32, r, plus },
        "ad" => Family::Ad { i: get("i").ok_or_else(|| bad("i"))? as i32, r, plus },
        _ => return Err(bad("family")),
    };
    spec_branch(n, family, get("omega_index").unwrap_or(0) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::named;

    #[test]
    fn roundtrip() {
        let x = named::a_star().sub(&named::q()).div(&ParamScalar::binomial(ParamMonomial([0, 2, 0, 0, 0, 0])));
        let back = scalar_from_json(&scalar_to_json(&x)).unwrap();
        assert_eq!(back, x);
        let s = spec_branch(3, Family::Ac { i: 2, r: 3, plus: false }, 0).unwrap();
        assert_eq!(spec_from_json(&spec_to_json(&s)).unwrap(), s);
    }
}
