//! Text, LaTeX and JSON forms of polynomials in Z[q][x].
//!
//! Text: ascending x-degree, `x^d` / `xq^d`, non-constant Z[q] coefficients
//! parenthesized in descending powers of q, e.g. `1 + (q + 1)*xq^1`.
//!
//! JSON: `{"basis": "xq"|"monomial", "terms": {"<d>": ["<c0>", "<c1>", ...]}}`
//! with coefficients of ascending powers of q as decimal strings.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{Map, Value};

use super::bivar::{Basis, BivarPoly, MonomialPoly, XqPoly};
use super::intpoly::IntPoly;
use crate::error::PolyError;

fn symbol(basis: Basis, d: usize, latex: bool) -> String {
    match (basis, latex) {
        (Basis::Monomial, false) if d == 1 => "x".to_string(),
        (Basis::Monomial, false) => format!("x^{d}"),
        (Basis::Falling, false) => format!("xq^{d}"),
        (Basis::Monomial, true) => format!("x^{{{d}}}"),
        (Basis::Falling, true) => format!("x_q^{{{d}}}"),
    }
}

fn render(p: &BivarPoly, latex: bool) -> String {
    let basis = p.basis();
    let mut out = String::new();
    for (d, c) in p.terms() {
        let term = if c.is_constant() {
            let v = c.coeff(0);
            if d == 0 {
                v.to_string()
            } else if v.is_one() {
                symbol(basis, d, latex)
            } else if (-&v).is_one() {
                format!("-{}", symbol(basis, d, latex))
            } else if latex {
                format!("{v} {}", symbol(basis, d, latex))
            } else {
                format!("{v}*{}", symbol(basis, d, latex))
            }
        } else {
            let inner = if latex { c.render_latex("q") } else { c.render("q") };
            match (d, latex) {
                (0, _) => format!("({inner})"),
                (_, false) => format!("({inner})*{}", symbol(basis, d, latex)),
                (_, true) => format!("({inner}) {}", symbol(basis, d, latex)),
            }
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_text(p: &BivarPoly) -> String {
    render(p, false)
}

pub fn render_latex(p: &BivarPoly) -> String {
    render(p, true)
}

pub fn to_json(p: &BivarPoly) -> Value {
    let mut terms = Map::new();
    for (d, c) in p.terms() {
        let coeffs = c.coeffs().iter().map(|v| Value::String(v.to_string())).collect();
        terms.insert(d.to_string(), Value::Array(coeffs));
    }
    let mut obj = Map::new();
    obj.insert("basis".into(), Value::String(p.basis().tag().into()));
    obj.insert("terms".into(), Value::Object(terms));
    Value::Object(obj)
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json_string(p: &BivarPoly) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(p)).expect("json values serialize");
    s.push('\n');
    s
}

pub fn from_json(v: &Value) -> Result<BivarPoly, PolyError> {
    let bad = |m: &str| PolyError::Malformed(m.to_string());
    let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
    let basis = match obj.get("basis").and_then(Value::as_str) {
        Some("xq") => Basis::Falling,
        Some("monomial") => Basis::Monomial,
        _ => return Err(bad("\"basis\" must be \"xq\" or \"monomial\"")),
    };
    let terms = obj
        .get("terms")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("\"terms\" must be an object"))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for (key, coeffs) in terms {
        let d: usize = key
            .parse()
            .map_err(|_| PolyError::Malformed(format!("x-degree {key:?} is not a nonnegative integer")))?;
        let arr = coeffs
            .as_array()
            .ok_or_else(|| PolyError::Malformed(format!("term {key}: expected an array")))?;
        let cs = arr
            .iter()
            .map(|c| {
                c.as_str()
                    .and_then(|s| s.parse::<BigInt>().ok())
                    .ok_or_else(|| PolyError::Malformed(format!("term {key}: {c} is not a decimal string")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push((d, IntPoly::new(cs)));
    }
    Ok(match basis {
        Basis::Monomial => BivarPoly::Monomial(MonomialPoly::from_terms(parsed)),
        Basis::Falling => BivarPoly::Falling(XqPoly::from_terms(parsed)),
    })
}

pub fn from_json_str(s: &str) -> Result<BivarPoly, PolyError> {
    let v: Value = serde_json::from_str(s).map_err(|e| PolyError::Malformed(e.to_string()))?;
    from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn text_forms() {
        let k2 = XqPoly::from_terms([(0, ip(&[1])), (1, ip(&[1, 1]))]);
        assert_eq!(k2.to_string(), "1 + (q + 1)*xq^1");
        let e2 = MonomialPoly::from_terms([(0, ip(&[1])), (1, ip(&[2])), (2, ip(&[1]))]);
        assert_eq!(e2.to_string(), "1 + 2*x + x^2");
        let m = MonomialPoly::from_terms([(1, ip(&[-3])), (2, ip(&[1]))]);
        assert_eq!(m.to_string(), "-3*x + x^2");
        let n = MonomialPoly::from_terms([(0, ip(&[2])), (1, ip(&[-1]))]);
        assert_eq!(n.to_string(), "2 - x");
        assert_eq!(XqPoly::zero().to_string(), "0");
    }

    #[test]
    fn latex_form() {
        let p = BivarPoly::Falling(XqPoly::from_terms([(0, ip(&[1])), (2, ip(&[1, 1, 1]))]));
        assert_eq!(render_latex(&p), "1 + (q^{2} + q + 1) x_q^{2}");
    }

    #[test]
    fn json_round_trip() {
        let p = BivarPoly::Falling(XqPoly::from_terms([
            (0, ip(&[1])),
            (1, ip(&[1, 1, 1])),
            (12, ip(&[-5, 0, 7])),
        ]));
        let s = to_json_string(&p);
        assert!(s.find("\"1\"").unwrap() < s.find("\"12\"").unwrap());
        let back = from_json_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(to_json_string(&back), s);
    }

    #[test]
    fn json_errors() {
        assert!(from_json_str("[]").is_err());
        assert!(from_json_str(r#"{"basis":"other","terms":{}}"#).is_err());
        assert!(from_json_str(r#"{"basis":"xq","terms":{"a":["1"]}}"#).is_err());
        assert!(from_json_str(r#"{"basis":"xq","terms":{"1":[1]}}"#).is_err());
    }
}
