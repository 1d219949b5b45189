//! JSON encodings.
//!
//! * integer: JSON number, or a decimal string when outside the `i64` range
//! * `Z` element: integer; `Z[sqrt(-5)]` element: `[a, b]`
//! * `Z` ideal: its nonnegative generator; `Z[sqrt(-5)]` ideal: HNF rows
//!   `[[a, 0], [b, c]]` (zero ideal `[[0, 0], [0, 0]]`); on input an integer
//!   `k` (meaning `(k)`) or `{"gens": [...]}` is also accepted
//! * fractional ideal: `{"num": ideal, "den": d}`
//! * matrix: `{"ring": "Z" | "ZSqrt-5", "entries": [[...], ...]}`
//! * chain: `{"ring": ..., "d": [ideals]}` or `{"ring": ..., "e": [ideals]}`
//! * triple: `{"ring": ..., "a": [ideals], "b": [...], "c": [...]}`

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ideal::{FracIdeal, Ideal};
use crate::invariants::DivisorChain;
use crate::matrix::Matrix;
use crate::oracle::{decode, ScanReport, TripleKey};
use crate::realize::{Triple, Verdict};
use crate::ring::{Ring, RingElem};
use crate::smith::{BlockNormalForm, LemmaReport, SmithDecomposition};

fn malformed(what: &str, v: &Value) -> Error {
    Error::Malformed(format!("expected {what}, got {v}"))
}

pub fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| malformed("an integer", v)),
        Value::String(s) => s.parse().map_err(|_| malformed("an integer", v)),
        _ => Err(malformed("an integer", v)),
    }
}

pub fn ring_from_json(v: &Value) -> Result<Ring> {
    v.as_str().and_then(Ring::parse).ok_or_else(|| malformed("\"Z\" or \"ZSqrt-5\"", v))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Malformed(format!("missing field \"{key}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(what, v))
}

pub fn elem_to_json(x: &RingElem) -> Value {
    match x.ring() {
        Ring::Z => int_to_json(x.a()),
        Ring::ZSqrtMinus5 => json!([int_to_json(x.a()), int_to_json(x.b())]),
    }
}

pub fn elem_from_json(ring: Ring, v: &Value) -> Result<RingElem> {
    match (ring, v) {
        (_, Value::Array(pair)) if pair.len() == 2 => {
            RingElem::new(ring, int_from_json(&pair[0])?, int_from_json(&pair[1])?)
        }
        _ => Ok(RingElem::from_int(ring, int_from_json(v)?)),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = m.rows().iter().map(|r| Value::Array(r.iter().map(elem_to_json).collect())).collect();
    json!({ "ring": m.ring().name(), "entries": rows })
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let ring = ring_from_json(field(v, "ring")?)?;
    let rows = array(field(v, "entries")?, "rows")?
        .iter()
        .map(|r| array(r, "a row")?.iter().map(|x| elem_from_json(ring, x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(ring, rows)
}

pub fn ideal_to_json(x: &Ideal) -> Value {
    match x.ring() {
        Ring::Z => int_to_json(&x.int_generator().expect("Z ideal")),
        Ring::ZSqrtMinus5 => match x.hnf() {
            Some(rows) => json!([
                [int_to_json(&rows[0][0]), int_to_json(&rows[0][1])],
                [int_to_json(&rows[1][0]), int_to_json(&rows[1][1])]
            ]),
            None => json!([[0, 0], [0, 0]]),
        },
    }
}

pub fn ideal_from_json(ring: Ring, v: &Value) -> Result<Ideal> {
    if let Some(gens) = v.get("gens") {
        let elems = array(gens, "generator list")?.iter().map(|g| elem_from_json(ring, g)).collect::<Result<Vec<_>>>()?;
        return Ideal::from_generators(&elems);
    }
    match (ring, v) {
        (Ring::ZSqrtMinus5, Value::Array(rows)) => {
            let rows = rows
                .iter()
                .map(|r| array(r, "an HNF row")?.iter().map(int_from_json).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            match rows.as_slice() {
                [r0, r1] if r0.len() == 2 && r1.len() == 2 => {
                    if rows.iter().flatten().all(Zero::is_zero) {
                        return Ok(Ideal::zero(ring));
                    }
                    if !r0[1].is_zero() {
                        return Err(malformed("HNF rows [[a, 0], [b, c]]", v));
                    }
                    Ideal::from_hnf(r0[0].clone(), r1[0].clone(), r1[1].clone())
                }
                _ => Err(malformed("HNF rows [[a, 0], [b, c]]", v)),
            }
        }
        _ => Ok(Ideal::from_int(ring, int_from_json(v)?)),
    }
}

pub fn frac_to_json(x: &FracIdeal) -> Value {
    json!({ "num": ideal_to_json(x.num()), "den": int_to_json(x.den()) })
}

pub fn frac_from_json(ring: Ring, v: &Value) -> Result<FracIdeal> {
    FracIdeal::new(ideal_from_json(ring, field(v, "num")?)?, int_from_json(field(v, "den")?)?)
}

fn ideals_to_json(xs: &[Ideal]) -> Value {
    Value::Array(xs.iter().map(ideal_to_json).collect())
}

fn ideals_from_json(ring: Ring, v: &Value) -> Result<Vec<Ideal>> {
    array(v, "a list of ideals")?.iter().map(|x| ideal_from_json(ring, x)).collect()
}

pub fn chain_to_json(c: &DivisorChain) -> Value {
    json!({ "ring": c.ring().name(), "d": ideals_to_json(c.determinantal()), "e": ideals_to_json(c.elementary()) })
}

/// Chain from `{"ring", "d"}` (determinantal) or `{"ring", "e"}` (elementary).
pub fn chain_from_json(v: &Value) -> Result<DivisorChain> {
    let ring = ring_from_json(field(v, "ring")?)?;
    if let Some(d) = v.get("d") {
        DivisorChain::from_determinantal(ring, ideals_from_json(ring, d)?)
    } else if let Some(e) = v.get("e") {
        DivisorChain::from_elementary(ring, ideals_from_json(ring, e)?)
    } else {
        Err(Error::Malformed("chain needs a \"d\" or \"e\" list".into()))
    }
}

pub fn triple_to_json(t: &Triple) -> Value {
    json!({
        "ring": t.ring().name(),
        "a": ideals_to_json(t.a()),
        "b": ideals_to_json(t.b()),
        "c": ideals_to_json(t.c()),
    })
}

pub fn triple_from_json(v: &Value) -> Result<Triple> {
    let ring = ring_from_json(field(v, "ring")?)?;
    let list = |k| ideals_from_json(ring, field(v, k)?);
    Triple::new(ring, list("a")?, list("b")?, list("c")?)
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    let (a, b) = match &v.witness {
        Some((a, b)) => (matrix_to_json(a), matrix_to_json(b)),
        None => (Value::Null, Value::Null),
    };
    json!({
        "outcome": v.outcome.to_string(),
        "violated": v.violated,
        "witnessA": a,
        "witnessB": b,
        "rationale": v.rationale,
    })
}

pub fn smith_to_json(s: &SmithDecomposition, verified: bool) -> Value {
    json!({ "P": matrix_to_json(&s.p), "D": matrix_to_json(&s.d), "Q": matrix_to_json(&s.q), "verified": verified })
}

pub fn block_form_to_json(f: &BlockNormalForm, verified: bool) -> Value {
    json!({
        "blocks": f.blocks.iter().map(matrix_to_json).collect::<Vec<_>>(),
        "P": matrix_to_json(&f.p),
        "Q": matrix_to_json(&f.q),
        "verified": verified,
    })
}

pub fn lemma_to_json(r: &LemmaReport) -> Value {
    json!({
        "passed": r.passed(),
        "elementary": ideals_to_json(&r.elementary),
        "blockDivisors": ideals_to_json(&r.block_divisors),
        "elementaryMatch": r.elementary_match,
        "columnClass": r.class.label(),
        "blockClassProduct": r.block_class_product.label(),
        "classMatch": r.class_match,
    })
}

fn key_to_json(ring: Ring, key: &TripleKey) -> Result<Value> {
    let list = |v: &[[i128; 3]]| -> Result<Value> {
        Ok(Value::Array(v.iter().map(|c| decode(ring, c).map(|x| ideal_to_json(&x))).collect::<Result<_>>()?))
    };
    Ok(json!({ "a": list(&key.a)?, "b": list(&key.b)?, "c": list(&key.c)? }))
}

pub fn report_to_json(ring: Ring, r: &ScanReport) -> Result<Value> {
    let triples = r.realized.iter().map(|k| key_to_json(ring, k)).collect::<Result<Vec<_>>>()?;
    let counter: Vec<Value> = r
        .counterexamples
        .iter()
        .map(|c| {
            json!({
                "check": c.check,
                "detail": c.detail,
                "A": c.a.as_ref().map(matrix_to_json),
                "B": c.b.as_ref().map(matrix_to_json),
            })
        })
        .collect();
    let stats: Map<String, Value> = r.stats.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    Ok(json!({ "ring": ring.name(), "stats": stats, "realizedTriples": triples, "counterexamples": counter }))
}
