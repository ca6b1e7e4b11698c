//! JSON encodings for the crate's value types.
//!
//! Schemas (all deterministic: map-like data is emitted in sorted order):
//!
//! - rational: `[num, den]`, each a JSON integer when it fits in an `i64`
//!   and a decimal string otherwise;
//! - polynomial in alpha: list of rationals, ascending powers;
//! - ratio of polynomials: `{"num": [...], "den": [...]}`;
//! - partition: list of parts; box: `[x, y]`;
//! - bracket factorization: `{"constant": [n,d], "factors": [[x,y,mult],...]}`;
//! - symmetric function: `{"basis": .., "degree": n, "terms":
//!   [{"partition": [...], "coeff": ...}, ...]}` with terms in
//!   reverse-lexicographic order;
//! - lattice rational function: `{"factors": [[x,y,order],...]}` sorted
//!   lexicographically.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::alpha::{AlphaPoly, AlphaRat, Rational};
use crate::jack::SymFunc;
use crate::lattice::LatticeRational;
use crate::partition::{BoxCoord, Partition};

fn bigint_to_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt, String> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(s) = v.as_str() {
        return s.parse().map_err(|_| format!("bad integer string {s:?}"));
    }
    Err(format!("expected integer or string, got {v}"))
}

pub fn rational_to_json(r: &Rational) -> Value {
    json!([bigint_to_json(r.numer()), bigint_to_json(r.denom())])
}

pub fn rational_from_json(v: &Value) -> Result<Rational, String> {
    let arr = v.as_array().ok_or("rational must be [num, den]")?;
    if arr.len() != 2 {
        return Err("rational must be [num, den]".into());
    }
    let num = bigint_from_json(&arr[0])?;
    let den = bigint_from_json(&arr[1])?;
    if den == BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(num, den))
}

pub fn poly_to_json(p: &AlphaPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<AlphaPoly, String> {
    let arr = v.as_array().ok_or("polynomial must be a list")?;
    let coeffs = arr
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlphaPoly::from_coeffs(coeffs))
}

pub fn alpharat_to_json(r: &AlphaRat) -> Value {
    json!({
        "num": poly_to_json(r.num()),
        "den": poly_to_json(r.den()),
    })
}

pub fn alpharat_from_json(v: &Value) -> Result<AlphaRat, String> {
    let num = poly_from_json(v.get("num").ok_or("missing num")?)?;
    let den = poly_from_json(v.get("den").ok_or("missing den")?)?;
    AlphaRat::new(num, den).map_err(|e| e.to_string())
}

pub fn partition_to_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

pub fn partition_from_json(v: &Value) -> Result<Partition, String> {
    let arr = v.as_array().ok_or("partition must be a list")?;
    let mut parts = Vec::with_capacity(arr.len());
    for x in arr {
        let p = x.as_u64().ok_or("parts must be non-negative integers")? as usize;
        parts.push(p);
    }
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err("parts must be weakly decreasing".into());
    }
    Ok(Partition::new(parts))
}

pub fn box_to_json(b: BoxCoord) -> Value {
    json!([b.x, b.y])
}

pub fn factored_to_json(constant: &Rational, factors: &BTreeMap<BoxCoord, usize>) -> Value {
    json!({
        "constant": rational_to_json(constant),
        "factors": factors
            .iter()
            .map(|(b, m)| json!([b.x, b.y, m]))
            .collect::<Vec<_>>(),
    })
}

pub fn symfunc_to_json(f: &SymFunc) -> Value {
    json!({
        "basis": f.basis().to_string(),
        "degree": f.degree().unwrap_or(0),
        "terms": f
            .terms_revlex()
            .iter()
            .map(|(p, c)| json!({
                "partition": partition_to_json(p),
                "coeff": alpharat_to_json(c),
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn lattice_to_json(t: &LatticeRational) -> Value {
    json!({
        "factors": t
            .iter()
            .map(|(b, ord)| json!([b.x, b.y, ord]))
            .collect::<Vec<_>>(),
    })
}

/// Report of one sum-product identity check: a status plus, on failure,
/// per-point residue data comparing the two sides.
pub fn sum_product_report_to_json(r: &crate::lattice::SumProductReport) -> Value {
    json!({
        "mu": partition_to_json(&r.mu),
        "nu": partition_to_json(&r.nu),
        "status": if r.holds { "ok" } else { "failed" },
        "witness": r
            .witness
            .iter()
            .map(|w| json!({
                "point": box_to_json(w.point),
                "lhs": alpharat_to_json(&w.lhs),
                "rhs": w.rhs.as_ref().map(alpharat_to_json).unwrap_or(Value::Null),
            }))
            .collect::<Vec<_>>(),
    })
}

/// Serialized monomial-basis Jack expansions for one degree.
pub(crate) fn jack_table_to_json(table: &crate::jack::JackTable) -> Value {
    let t = &table.tables;
    let jacks: Vec<Value> = t
        .parts
        .iter()
        .enumerate()
        .map(|(i, lam)| {
            let terms: Vec<Value> = table.m_coeffs[i]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| {
                    json!({
                        "partition": partition_to_json(&t.parts[j]),
                        "coeff": poly_to_json(c),
                    })
                })
                .collect();
            json!({ "lambda": partition_to_json(lam), "terms": terms })
        })
        .collect();
    json!({ "degree": t.n, "jacks": jacks })
}

/// Parses a serialized degree table back into dense monomial coefficients.
pub(crate) fn jack_table_from_json(v: &Value) -> Result<(usize, Vec<Vec<AlphaPoly>>), String> {
    let n = v
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or("missing degree")? as usize;
    let tables = crate::jack::degree_tables(n);
    let count = tables.parts.len();
    let jacks = v
        .get("jacks")
        .and_then(Value::as_array)
        .ok_or("missing jacks")?;
    if jacks.len() != count {
        return Err(format!("expected {count} expansions, got {}", jacks.len()));
    }
    let mut m_coeffs = vec![vec![AlphaPoly::zero(); count]; count];
    for entry in jacks {
        let lam = partition_from_json(entry.get("lambda").ok_or("missing lambda")?)?;
        let i = *tables
            .index
            .get(&lam)
            .ok_or_else(|| format!("unknown partition {lam}"))?;
        for term in entry
            .get("terms")
            .and_then(Value::as_array)
            .ok_or("missing terms")?
        {
            let mu = partition_from_json(term.get("partition").ok_or("missing partition")?)?;
            let j = *tables
                .index
                .get(&mu)
                .ok_or_else(|| format!("unknown partition {mu}"))?;
            m_coeffs[i][j] = poly_from_json(term.get("coeff").ok_or("missing coeff")?)?;
        }
    }
    Ok((n, m_coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::{rat, ratio};
    use num_traits::One;

    #[test]
    fn rational_round_trip() {
        for r in [rat(0), rat(-7), ratio(22, 7)] {
            assert_eq!(rational_from_json(&rational_to_json(&r)).unwrap(), r);
        }
        // Values beyond i64 go through strings.
        let big = Rational::from_integer("123456789012345678901234567890".parse().unwrap());
        let v = rational_to_json(&big);
        assert!(v[0].is_string());
        assert_eq!(rational_from_json(&v).unwrap(), big);
    }

    #[test]
    fn poly_and_ratio_round_trip() {
        let p = AlphaPoly::from_coeffs(vec![rat(1), rat(3), rat(2)]);
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
        let r = AlphaRat::new(
            AlphaPoly::alpha(),
            AlphaPoly::from_coeffs(vec![rat(1), rat(1)]),
        )
        .unwrap();
        assert_eq!(alpharat_from_json(&alpharat_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn partition_round_trip() {
        let p = Partition::new(vec![4, 2, 2, 1, 1]);
        assert_eq!(partition_from_json(&partition_to_json(&p)).unwrap(), p);
        assert!(partition_from_json(&json!([1, 2])).is_err());
    }

    #[test]
    fn one_is_not_special() {
        let one = Rational::one();
        assert_eq!(rational_to_json(&one), json!([1, 1]));
    }
}
