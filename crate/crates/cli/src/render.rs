//! JSON forms of pencils, curves and constructions.

use g25::algebra::{BigFloat, Cplx, RealField, UniPoly};
use g25::grassmann::{Certificate, PencilCurve, PlueckerCurve, Poly};
use g25::moduli::{fmt_sig, Construction, Family33};
use g25::sl2rep::PAIRS;
use serde_json::{json, Map, Value};

/// Exact kinds print their closed form, float kinds 12 significant digits.
fn scalar<R: RealField>(x: &R) -> String {
    if R::EXACT {
        format!("{x:?}")
    } else {
        fmt_sig(x.to_f64(), 12)
    }
}

fn poly<R: RealField>(p: &Poly<R>) -> Value {
    Value::Array(p.coeffs().iter().map(|c| json!([scalar(&c.re), scalar(&c.im)])).collect())
}

fn pencil<R: RealField>(p: &PencilCurve<R>) -> Value {
    Value::Array(p.rows().iter().map(|row| Value::Array(row.iter().map(poly).collect())).collect())
}

fn plucker<R: RealField>(f: &PlueckerCurve<R>) -> Value {
    let mut m = Map::new();
    for (&(i, j), p) in PAIRS.iter().zip(f.coords()) {
        m.insert(format!("p{i}{j}"), poly(p));
    }
    Value::Object(m)
}

pub fn construction<R: RealField>(input: Value, c: &Construction<R>, count: usize) -> Value {
    let mp = &c.point;
    let mut moduli = Map::new();
    for (k, t) in mp.t.iter().enumerate() {
        moduli.insert(format!("t{k}"), json!(scalar(t)));
    }
    for (n, v) in [("g", &mp.g), ("X", &mp.x), ("Y", &mp.y), ("Z", &mp.z)] {
        moduli.insert(n.into(), json!(scalar(v)));
    }
    json!({
        "input": input,
        "exact": R::EXACT,
        "moduli": moduli,
        "count": count,
        "theta": c.solution.angles.theta.iter().map(|x| fmt_sig(*x, 12)).collect::<Vec<_>>(),
        "pencil": pencil(&c.pencil),
        "plucker": plucker(&c.curve),
        "w_over_pi": fmt_sig(c.w_over_pi, 12),
        "certificate": c.certificate,
    })
}

pub fn family_member(theta: &str, f: &Family33<BigFloat>, cert: &Certificate, w_over_pi: f64) -> Value {
    json!({
        "input": { "family33": theta },
        "exact": false,
        "moduli": { "t0": scalar(&f.t[0]), "t1": scalar(&f.t[1]), "t6": scalar(&f.t[2]), "g": "1" },
        "pencil": pencil(&f.pencil),
        "plucker": plucker(&f.curve),
        "w_over_pi": fmt_sig(w_over_pi, 12),
        "certificate": cert,
    })
}

/// Reads `[[row1 entries], [row2 entries]]`, each entry a list of `[re, im]`
/// string pairs in increasing powers of `z`.
pub fn parse_pencil<R: RealField>(v: &Value, parse: impl Fn(&str) -> Option<R>) -> Result<PencilCurve<R>, String> {
    let rows = v.as_array().filter(|r| r.len() == 2).ok_or("pencil must have two rows")?;
    let mut out: Vec<Vec<Poly<R>>> = Vec::new();
    for row in rows {
        let entries = row.as_array().filter(|r| r.len() == 5).ok_or("each pencil row must have five entries")?;
        let mut polys = Vec::new();
        for e in entries {
            let coeffs = e.as_array().ok_or("pencil entry must be a list of coefficients")?;
            let mut cs = Vec::new();
            for c in coeffs {
                let pair = c.as_array().filter(|p| p.len() == 2).ok_or("coefficient must be [re, im]")?;
                let part = |x: &Value| {
                    let s = x.as_str().map(str::to_owned).or_else(|| x.as_f64().map(|f| f.to_string()));
                    s.as_deref().and_then(&parse).ok_or_else(|| format!("cannot parse coefficient {x}"))
                };
                cs.push(Cplx::new(part(&pair[0])?, part(&pair[1])?));
            }
            polys.push(UniPoly::new(cs));
        }
        out.push(polys);
    }
    let row2 = out.pop().expect("two rows");
    let row1 = out.pop().expect("two rows");
    PencilCurve::new(row1, row2).map_err(|e| e.to_string())
}
