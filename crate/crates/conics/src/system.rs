//! Linear systems of forms in reduced echelon form.

use std::fmt;

use serde_json::{json, Value};

use conet_kernel::{Matrix, Scalar, SparseEchelon, SparseVec};
use conet_poly::{form_det3, form_from_json, form_to_json, lie_action, monomial_count, monomial_index, HForm, Vars};

use crate::ConicError;

/// A subspace of the forms of one degree, stored by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSystem {
    degree: u32,
    basis: Vec<HForm>,
}

impl LinearSystem {
    /// Span of `forms`; the dimension is the rank, which may be below `forms.len()`.
    pub fn new(forms: &[HForm]) -> Result<Self, ConicError> {
        let degree = forms.iter().find(|f| !f.is_zero()).map(HForm::degree).unwrap_or(2);
        Self::with_degree(degree, forms)
    }

    pub fn with_degree(degree: u32, forms: &[HForm]) -> Result<Self, ConicError> {
        if forms.iter().any(|f| !f.is_zero() && f.degree() != degree) {
            return Err(ConicError::Poly(conet_poly::PolyError::DegreeMismatch));
        }
        if forms.is_empty() {
            return Ok(LinearSystem { degree, basis: Vec::new() });
        }
        let m = Matrix::from_rows(forms.iter().map(HForm::to_vector).collect());
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| HForm::from_vector(degree, r.row(i))).collect();
        Ok(LinearSystem { degree, basis })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[HForm] {
        &self.basis
    }

    pub fn is_rational(&self) -> bool {
        self.basis.iter().all(HForm::is_rational)
    }

    pub(crate) fn echelon(&self) -> SparseEchelon {
        let mut e = SparseEchelon::new(monomial_count(self.degree));
        for b in &self.basis {
            e.insert(form_vec(b));
        }
        e
    }

    pub fn contains(&self, f: &HForm) -> bool {
        f.is_zero() || (f.degree() == self.degree && self.echelon().contains(&form_vec(f)))
    }

    /// Image under the substitution `x -> g x` applied to every member.
    pub fn substitute(&self, g: &Matrix) -> Result<Self, ConicError> {
        let forms = self.basis.iter().map(|b| b.substitute(g)).collect::<Result<Vec<_>, _>>()?;
        Self::with_degree(self.degree, &forms)
    }

    pub fn to_json(&self) -> Value {
        let field = if self.is_rational() { "Q" } else { "Qw" };
        json!({"field": field, "forms": self.basis.iter().map(form_to_json).collect::<Vec<_>>()})
    }

    /// Reads `{"field", "forms"}`; the forms are canonicalized, not kept verbatim.
    pub fn from_json(v: &Value) -> Result<Self, ConicError> {
        let forms = forms_from_json(v)?;
        Self::new(&forms)
    }
}

/// The generator list of a system file, in file order.
pub fn forms_from_json(v: &Value) -> Result<Vec<HForm>, ConicError> {
    let field = v.get("field").and_then(Value::as_str).unwrap_or("Qw");
    let forms = v
        .get("forms")
        .and_then(Value::as_array)
        .ok_or_else(|| ConicError::Input("missing \"forms\" array".into()))?
        .iter()
        .map(form_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    match field {
        "Q" if !forms.iter().all(HForm::is_rational) => {
            Err(ConicError::Input("field Q declared but a coefficient involves w".into()))
        }
        "Q" | "Qw" => Ok(forms),
        other => Err(ConicError::Input(format!("unknown field {other:?}"))),
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

pub(crate) fn form_vec(f: &HForm) -> SparseVec {
    f.terms().map(|(e, c)| (monomial_index(*e), c.clone())).collect()
}

/// Order (X^2, Y^2, Z^2, XY, YZ, XZ) and weights of the duality pairing.
pub const DUAL_ORDER: [[u32; 3]; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [0, 1, 1], [1, 0, 1]];
pub const DUAL_WEIGHTS: [i64; 6] = [2, 2, 2, 1, 1, 1];

pub fn dual_coordinates(q: &HForm) -> Vec<Scalar> {
    DUAL_ORDER.iter().map(|e| q.coeff(*e)).collect()
}

/// The pairing `sum w_i a_i b_i` on quadrics.
pub fn dual_pairing(p: &HForm, q: &HForm) -> Scalar {
    DUAL_ORDER
        .iter()
        .zip(DUAL_WEIGHTS)
        .map(|(e, w)| p.coeff(*e) * q.coeff(*e) * Scalar::int(w))
        .sum()
}

/// Orthogonal complement of a system of conics under the duality pairing.
pub fn orthogonal_complement(v: &LinearSystem) -> Result<LinearSystem, ConicError> {
    if v.degree() != 2 {
        return Err(ConicError::Input("duality is defined on conics only".into()));
    }
    if v.dim() == 0 {
        let all: Vec<HForm> = DUAL_ORDER.iter().map(|e| HForm::monomial(*e, Scalar::one())).collect();
        return LinearSystem::new(&all);
    }
    let rows: Vec<Vec<Scalar>> = v
        .basis()
        .iter()
        .map(|b| dual_coordinates(b).iter().zip(DUAL_WEIGHTS).map(|(c, w)| c * Scalar::int(w)).collect())
        .collect();
    let kernel = Matrix::from_rows(rows).kernel();
    let forms: Vec<HForm> = kernel
        .iter()
        .map(|k| HForm::from_terms(2, DUAL_ORDER.iter().copied().zip(k.iter().cloned())).expect("quadric"))
        .collect();
    LinearSystem::with_degree(2, &forms)
}

/// Symmetric matrix `sum_i v_i M(q_i)` with linear-form entries in `A, B, C`.
pub fn pencil_matrix(forms: &[HForm]) -> [[HForm; 3]; 3] {
    assert!(forms.len() <= 3, "at most three generators");
    let mats: Vec<Matrix> = forms.iter().map(HForm::conic_matrix).collect();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            mats.iter()
                .enumerate()
                .fold(HForm::zero(1), |acc, (k, m)| acc.add(&HForm::var(k).scale(&m[(i, j)])))
                .with_vars(Vars::Abc)
        })
    })
}

/// `det(A M1 + B M2 + C M3)` for the generators in the given order.
pub fn discriminant_of(forms: &[HForm]) -> HForm {
    let det = form_det3(&pencil_matrix(forms)).expect("linear entries");
    det.with_vars(Vars::Abc)
}

/// Discriminant cubic of a net, in the order of its canonical basis.
pub fn discriminant_cubic(net: &LinearSystem) -> Result<HForm, ConicError> {
    if net.degree() != 2 || net.dim() != 3 {
        return Err(ConicError::NotThreeDimensional(net.dim()));
    }
    Ok(discriminant_of(net.basis()))
}

/// Rank of the infinitesimal action of gl(3) on the system, as a point of its Grassmannian.
pub fn orbit_dimension(v: &LinearSystem) -> usize {
    let e = v.echelon();
    let mut images = SparseEchelon::new(v.dim() * monomial_count(v.degree()));
    let stride = monomial_count(v.degree());
    for i in 0..3 {
        for j in 0..3 {
            let mut row = SparseVec::new();
            for (k, b) in v.basis().iter().enumerate() {
                let mut w = form_vec(&lie_action(b, i, j));
                e.reduce(&mut w);
                row.extend(w.into_iter().map(|(c, x)| (k * stride + c, x)));
            }
            images.insert(row);
        }
    }
    images.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use conet_poly::f;

    #[test]
    fn canonical_basis_is_idempotent() {
        let v = LinearSystem::new(&[f("X^2+Y*Z"), f("X^2-Y*Z"), f("X*Y")]).unwrap();
        assert_eq!(v.basis(), &[f("X^2"), f("X*Y"), f("Y*Z")]);
        assert_eq!(LinearSystem::new(v.basis()).unwrap(), v);
        assert_eq!(LinearSystem::new(&[f("X^2"), f("2*X^2")]).unwrap().dim(), 1);
    }

    #[test]
    fn json_round_trip() {
        let v = LinearSystem::new(&[f("X^2+w*Y*Z"), f("X*Y")]).unwrap();
        let j = v.to_json();
        assert_eq!(j["field"], "Qw");
        assert_eq!(LinearSystem::from_json(&j).unwrap(), v);
    }
}
