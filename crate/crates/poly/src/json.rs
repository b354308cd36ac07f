//! JSON form `{"degree": d, "terms": [{"coef": "...", "exp": [i, j, k]}]}`.

use serde_json::{json, Value};

use conet_kernel::Scalar;

use crate::form::{Exp, HForm};
use crate::PolyError;

pub fn form_to_json(f: &HForm) -> Value {
    let terms: Vec<Value> = f.terms().map(|(e, c)| json!({"coef": c.to_string(), "exp": e.to_vec()})).collect();
    json!({"degree": f.degree(), "terms": terms})
}

fn bad(msg: &str) -> PolyError {
    PolyError::Parse(msg.to_string())
}

pub fn form_from_json(v: &Value) -> Result<HForm, PolyError> {
    let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("missing degree"))? as u32;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coef = t.get("coef").and_then(Value::as_str).ok_or_else(|| bad("term without coef"))?;
        let coef: Scalar = coef.parse().map_err(PolyError::Kernel)?;
        let exp = t.get("exp").and_then(Value::as_array).ok_or_else(|| bad("term without exp"))?;
        if exp.len() != 3 {
            return Err(bad("exponent must have three entries"));
        }
        let mut e: Exp = [0; 3];
        for (k, x) in exp.iter().enumerate() {
            e[k] = x.as_u64().ok_or_else(|| bad("exponent entries must be naturals"))? as u32;
        }
        out.push((e, coef));
    }
    HForm::from_terms(degree, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::f;

    #[test]
    fn round_trip() {
        let g = f("(2/3+w)*X^2*Y - Z^3");
        let v = form_to_json(&g);
        assert_eq!(v["terms"][0]["coef"], "2/3+1*w");
        assert_eq!(form_from_json(&v).unwrap(), g);
        let bad_deg = json!({"degree": 2, "terms": [{"coef": "1", "exp": [1, 0, 0]}]});
        assert_eq!(form_from_json(&bad_deg), Err(PolyError::NotHomogeneous));
    }
}
