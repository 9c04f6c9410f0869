//! JSON rendering of reports. The report schema mirrors the library's
//! `ObstructionReport` field for field; matrices are serialized row-major
//! as nested arrays and polynomials as `{lowdeg, coeffs}`. Integers are
//! emitted as exact JSON numbers regardless of size.

use seifert::abelian::AbelianGroup;
use seifert::families::{KnotSpec, MetabolizerForm};
use seifert::laurent::LaurentPoly;
use seifert::pipeline::{ObstructionReport, TableScreen};
use seifert::{Int, IntMatrix};
use serde_json::{json, Number, Value};

fn big(n: &Int) -> Value {
    let number: Number = serde_json::from_str(&n.to_string())
        .expect("a decimal integer literal is a valid JSON number");
    Value::Number(number)
}

fn matrix(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| big(&m[(i, j)])).collect()))
            .collect(),
    )
}

fn poly(p: &LaurentPoly) -> Value {
    json!({
        "lowdeg": p.lowdeg(),
        "coeffs": p.coeffs().iter().map(big).collect::<Vec<_>>(),
    })
}

fn group(g: &AbelianGroup) -> Value {
    json!({
        "torsion": g.torsion().iter().map(big).collect::<Vec<_>>(),
        "free_rank": g.free_rank(),
    })
}

fn metab(m: &MetabolizerForm) -> Value {
    json!({
        "a": big(&m.a),
        "b": big(&m.b),
        "basis_change": matrix(&m.basis_change),
    })
}

fn spec(k: &KnotSpec) -> Value {
    match k {
        KnotSpec::Matrix(m) => json!({"kind": "matrix", "entries": matrix(m.matrix())}),
        KnotSpec::Pretzel { p, q, r } => {
            json!({"kind": "pretzel", "p": big(p), "q": big(q), "r": big(r)})
        }
        KnotSpec::Whitehead { clasp, twists } => {
            json!({"kind": "whitehead", "clasp": clasp.to_string(), "twists": big(twists)})
        }
        KnotSpec::Catalog(name) => json!({"kind": "catalog", "name": name}),
    }
}

fn opt<T>(v: &Option<T>, f: impl Fn(&T) -> Value) -> Value {
    v.as_ref().map(f).unwrap_or(Value::Null)
}

pub fn report(r: &ObstructionReport) -> Value {
    json!({
        "input": spec(&r.input),
        "seifert": opt(&r.seifert, |m| matrix(m.matrix())),
        "alexander": opt(&r.alexander, poly),
        "determinant": big(&r.determinant),
        "det_square": r.det_square,
        "alg_slice": opt(&r.alg_slice, |b| Value::Bool(*b)),
        "metab": opt(&r.metab, metab),
        "h1": opt(&r.h1, group),
        "h1_cyclic": opt(&r.h1_cyclic, |b| Value::Bool(*b)),
        "gcd_value": opt(&r.gcd_value, big),
        "trotter_applicable": opt(&r.trotter_applicable, |b| Value::Bool(*b)),
        "congruence_blocked": opt(&r.congruence_blocked, |b| Value::Bool(*b)),
        "unique_surface_asserted": r.unique_surface_asserted,
        "verdict": r.verdict.to_string(),
        "reasons": r.reasons.iter().map(|x| json!({
            "tag": x.tag.as_str(),
            "detail": x.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn table(t: &TableScreen) -> Value {
    json!({
        "rows": t.rows.iter().map(|row| json!({
            "name": row.name,
            "determinant": row.determinant,
            "square": row.square,
            "status": row.status.to_string(),
        })).collect::<Vec<_>>(),
        "survivors": t.survivors,
    })
}
