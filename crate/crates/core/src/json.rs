//! JSON views of profiles, idempotents, descriptors and matrices.
//!
//! Polynomials serialize as arrays of ascending coefficients. Prime-field
//! coefficients are plain integers; extension-field coefficients are arrays
//! of base-p digits. Key order inside objects is alphabetical, so output is
//! byte-stable across runs.

use serde_json::{json, Map, Value};

use crate::code::{CodeDescriptor, OuterSpec};
use crate::error::{Error, Result};
use crate::factor::FactorProfile;
use crate::field::{Fq, FqElem, Poly};
use crate::matrix::MatrixFq;

pub fn elem_to_json(field: &Fq, e: FqElem) -> Value {
    if field.m() == 1 {
        json!(e)
    } else {
        json!(field.elem_digits(e))
    }
}

pub fn elem_from_json(field: &Fq, v: &Value) -> Result<FqElem> {
    if field.m() == 1 {
        let e = v
            .as_u64()
            .ok_or_else(|| Error::InvalidInput("expected integer coefficient".into()))?;
        if e >= field.q() {
            return Err(Error::InvalidInput(format!("coefficient {e} out of range")));
        }
        Ok(e)
    } else {
        let digits: Vec<u64> = v
            .as_array()
            .ok_or_else(|| Error::InvalidInput("expected digit array coefficient".into()))?
            .iter()
            .map(|d| {
                d.as_u64()
                    .ok_or_else(|| Error::InvalidInput("expected integer digit".into()))
            })
            .collect::<Result<_>>()?;
        field.elem_from_digits(&digits)
    }
}

pub fn poly_to_json(field: &Fq, p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|&c| elem_to_json(field, c)).collect())
}

pub fn poly_from_json(field: &Fq, v: &Value) -> Result<Poly> {
    let coeffs = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("expected coefficient array".into()))?
        .iter()
        .map(|c| elem_from_json(field, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

pub fn profile_to_json(profile: &FactorProfile) -> Value {
    let field = &profile.field;
    json!({
        "q": field.q(),
        "n": profile.n,
        "r": profile.r,
        "t": profile.t,
        "factors": profile
            .factors
            .iter()
            .map(|f| poly_to_json(field, f))
            .collect::<Vec<_>>(),
        "factors_text": profile.factors.iter().map(|f| f.display()).collect::<Vec<_>>(),
        "degrees": profile.degrees,
        "pairs": (1..=profile.t).map(|j| {
            let (i, it) = profile.pair_indices(j);
            json!([i, it])
        }).collect::<Vec<_>>(),
    })
}

fn spec_to_json(field: &Fq, i: usize, spec: &OuterSpec) -> Value {
    let mut m = Map::new();
    m.insert("i".into(), json!(i));
    match spec {
        OuterSpec::Zero => {
            m.insert("kind".into(), json!("zero"));
        }
        OuterSpec::Full => {
            m.insert("kind".into(), json!("full"));
        }
        OuterSpec::Line(g1, g2) => {
            m.insert("kind".into(), json!("line"));
            m.insert("g1".into(), poly_to_json(field, g1));
            m.insert("g2".into(), poly_to_json(field, g2));
        }
    }
    Value::Object(m)
}

pub fn descriptor_to_json(profile: &FactorProfile, desc: &CodeDescriptor) -> Value {
    json!({
        "q": profile.field.q(),
        "n": profile.n,
        "specs": desc
            .specs
            .iter()
            .enumerate()
            .map(|(i, s)| spec_to_json(&profile.field, i, s))
            .collect::<Vec<_>>(),
    })
}

/// Parses what [`descriptor_to_json`] emits; returns (q, n, descriptor).
/// The caller rebuilds the profile from (q, n) and validates against it.
pub fn descriptor_from_json(v: &Value) -> Result<(u64, usize, CodeDescriptor)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("expected descriptor object".into()))?;
    let q = obj
        .get("q")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidInput("missing field 'q'".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidInput("missing field 'n'".into()))? as usize;
    let field = Fq::from_order(q)?;
    let specs_json = obj
        .get("specs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidInput("missing field 'specs'".into()))?;
    let mut specs: Vec<Option<OuterSpec>> = vec![None; specs_json.len()];
    for sv in specs_json {
        let so = sv
            .as_object()
            .ok_or_else(|| Error::InvalidInput("expected spec object".into()))?;
        let i = so
            .get("i")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidInput("spec missing index 'i'".into()))?
            as usize;
        if i >= specs.len() || specs[i].is_some() {
            return Err(Error::InvalidInput(format!("bad or repeated spec index {i}")));
        }
        let kind = so
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::InvalidInput("spec missing 'kind'".into()))?;
        specs[i] = Some(match kind {
            "zero" => OuterSpec::Zero,
            "full" => OuterSpec::Full,
            "line" => {
                let g1 = so
                    .get("g1")
                    .ok_or_else(|| Error::InvalidInput("line spec missing 'g1'".into()))?;
                let g2 = so
                    .get("g2")
                    .ok_or_else(|| Error::InvalidInput("line spec missing 'g2'".into()))?;
                OuterSpec::Line(poly_from_json(&field, g1)?, poly_from_json(&field, g2)?)
            }
            other => {
                return Err(Error::InvalidInput(format!("unknown spec kind '{other}'")))
            }
        });
    }
    let specs = specs
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidInput("missing spec index".into()))?;
    Ok((q, n, CodeDescriptor { specs }))
}

pub fn matrix_to_json(field: &Fq, m: &MatrixFq) -> Value {
    json!({
        "rows": m.rows,
        "cols": m.cols,
        "entries": (0..m.rows)
            .map(|r| {
                m.row(r)
                    .iter()
                    .map(|&e| elem_to_json(field, e))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{enumerate, DualityClass};

    #[test]
    fn poly_round_trip_prime_and_extension() {
        let f3 = Fq::new(3, 1).unwrap();
        let p = Poly::from_coeffs(vec![1, 2, 0, 1]);
        let v = poly_to_json(&f3, &p);
        assert_eq!(v, json!([1, 2, 0, 1]));
        assert_eq!(poly_from_json(&f3, &v).unwrap(), p);

        let f4 = Fq::new(2, 2).unwrap();
        let p = Poly::from_coeffs(vec![2, 3]);
        let v = poly_to_json(&f4, &p);
        assert_eq!(v, json!([[0, 1], [1, 1]]));
        assert_eq!(poly_from_json(&f4, &v).unwrap(), p);

        assert!(poly_from_json(&f3, &json!([5])).is_err());
    }

    #[test]
    fn descriptor_round_trip() {
        let pr = FactorProfile::new(Fq::new(2, 1).unwrap(), 21).unwrap();
        for desc in enumerate(&pr, DualityClass::SelfDual).unwrap().take(40) {
            let v = descriptor_to_json(&pr, &desc);
            let (q, n, back) = descriptor_from_json(&v).unwrap();
            assert_eq!((q, n), (2, 21));
            assert_eq!(back, desc);
        }
    }

    #[test]
    fn profile_json_fields() {
        let pr = FactorProfile::new(Fq::new(2, 1).unwrap(), 21).unwrap();
        let v = profile_to_json(&pr);
        assert_eq!(v["q"], json!(2));
        assert_eq!(v["n"], json!(21));
        assert_eq!(v["r"], json!(1));
        assert_eq!(v["t"], json!(2));
        assert_eq!(v["pairs"], json!([[2, 4], [3, 5]]));
        assert_eq!(v["factors"][0], json!([1, 1]));
    }
}
