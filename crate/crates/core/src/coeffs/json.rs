use num_bigint::BigInt;
use serde_json::{json, Value};

use super::cyclotomic::CycloElement;
use super::laurent::LaurentScalar;
use super::ratfunc::RationalFunction;
use super::scalar::{CoeffDomain, RootScalar, Scalar};
use super::{CoeffError, Rational};

fn bad(msg: impl Into<String>) -> CoeffError {
    CoeffError::Json(msg.into())
}

pub(crate) fn rational_to_json(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

fn parse_int(v: &Value) -> Result<BigInt, CoeffError> {
    v.as_str().ok_or_else(|| bad("expected decimal string"))?.parse().map_err(|_| bad("bad integer"))
}

fn make_rational(num: BigInt, den: BigInt) -> Result<Rational, CoeffError> {
    if den == BigInt::from(0) {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn rational_from_json(v: &Value) -> Result<Rational, CoeffError> {
    let num = parse_int(v.get("num").ok_or_else(|| bad("missing num"))?)?;
    let den = parse_int(v.get("den").ok_or_else(|| bad("missing den"))?)?;
    make_rational(num, den)
}

fn laurent_to_json(v: &LaurentScalar) -> Value {
    Value::Array(v.terms().map(|(s, e, c)| json!([s, e, c.numer().to_string(), c.denom().to_string()])).collect())
}

fn laurent_from_json(v: &Value) -> Result<LaurentScalar, CoeffError> {
    let arr = v.as_array().ok_or_else(|| bad("expected term array"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let t = t.as_array().filter(|t| t.len() == 4).ok_or_else(|| bad("term must be [s, eps, num, den]"))?;
        let s = t[0].as_i64().ok_or_else(|| bad("s power"))? as i32;
        let e = t[1].as_u64().ok_or_else(|| bad("eps power"))? as u32;
        terms.push(((s, e), make_rational(parse_int(&t[2])?, parse_int(&t[3])?)?));
    }
    Ok(LaurentScalar::from_terms(terms))
}

fn cyclo_coeffs_json(c: &CycloElement) -> Value {
    Value::Array(c.coeffs().iter().map(rational_to_json).collect())
}

/// JSON form of a scalar.
///
/// Generic polynomials are Laurent term arrays `[[s, eps, num, den], …]`;
/// genuine quotients are `{"num": …, "den": …}` with Laurent arrays inside.
/// Root-of-unity values are `{"conductor": M, "coeffs": […]}`, or
/// `{"conductor": M, "eps_coeffs": [[k, […]], …]}` when `ε` survives.
pub fn scalar_to_json(v: &Scalar) -> Value {
    match v {
        Scalar::Generic(f) if f.is_polynomial() => laurent_to_json(f.numerator()),
        Scalar::Generic(f) => json!({
            "num": laurent_to_json(f.numerator()),
            "den": laurent_to_json(f.denominator()),
        }),
        Scalar::Root(r) => {
            let conductor = r.field().conductor();
            match r.as_cyclo() {
                Some(c) => json!({"conductor": conductor, "coeffs": cyclo_coeffs_json(&c)}),
                None => json!({
                    "conductor": conductor,
                    "eps_coeffs": r.eps_terms().map(|(k, c)| json!([k, cyclo_coeffs_json(c)])).collect::<Vec<_>>(),
                }),
            }
        }
    }
}

pub fn scalar_from_json(v: &Value, domain: &CoeffDomain) -> Result<Scalar, CoeffError> {
    match domain.field() {
        None => {
            if v.is_array() {
                return Ok(Scalar::Generic(laurent_from_json(v)?.into()));
            }
            let num = laurent_from_json(v.get("num").ok_or_else(|| bad("missing num"))?)?;
            let den = laurent_from_json(v.get("den").ok_or_else(|| bad("missing den"))?)?;
            Ok(Scalar::Generic(RationalFunction::new(num, den)?))
        }
        Some(field) => {
            let m = v.get("conductor").and_then(Value::as_u64).ok_or_else(|| bad("missing conductor"))?;
            if m != field.conductor() as u64 {
                return Err(bad(format!("conductor {m} does not match domain {}", field.conductor())));
            }
            let read = |arr: &Value| -> Result<CycloElement, CoeffError> {
                let arr = arr.as_array().ok_or_else(|| bad("coeffs must be an array"))?;
                let cs = arr.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>()?;
                Ok(CycloElement::from_coeffs(field, cs))
            };
            if let Some(cs) = v.get("coeffs") {
                return Ok(Scalar::Root(RootScalar::constant(read(cs)?)));
            }
            let terms = v.get("eps_coeffs").and_then(Value::as_array).ok_or_else(|| bad("missing coeffs"))?;
            let mut slots = Vec::new();
            for t in terms {
                let k = t.get(0).and_then(Value::as_u64).ok_or_else(|| bad("eps power"))? as usize;
                if slots.len() <= k {
                    slots.resize(k + 1, CycloElement::zero(field));
                }
                slots[k] = read(t.get(1).ok_or_else(|| bad("missing eps coeffs"))?)?;
            }
            Ok(Scalar::Root(RootScalar::from_coeffs(field, slots)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_form() {
        let r = Rational::new((-3).into(), 6.into());
        let v = rational_to_json(&r);
        assert_eq!(v, json!({"num": "-1", "den": "2"}));
        assert_eq!(rational_from_json(&v).unwrap(), r);
    }

    #[test]
    fn laurent_form() {
        let d = CoeffDomain::generic();
        let v = &d.s_pow(1) - &d.int(2);
        let j = scalar_to_json(&v);
        assert_eq!(j, json!([[0, 0, "-2", "1"], [1, 0, "1", "1"]]));
        assert_eq!(scalar_from_json(&j, &d).unwrap(), v);
    }

    #[test]
    fn cyclo_form() {
        let d = CoeffDomain::root_of_unity(3).unwrap();
        let v = d.s_pow(1);
        let j = scalar_to_json(&v);
        assert_eq!(j["conductor"], json!(6));
        assert_eq!(j["coeffs"].as_array().unwrap().len(), 2);
        assert_eq!(scalar_from_json(&j, &d).unwrap(), v);
    }
}
