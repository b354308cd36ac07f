//! Projective types of plane cubics.

use std::fmt;

use serde_json::{json, Value};

use conet_conics::{graded_report_auto, support_count, Dimension, Length};
use conet_kernel::{binary_pattern, Matrix, Scalar, UPoly};
use conet_poly::{form_det3, hessian_matrix, HForm};

use crate::aronhold::{aronhold, InvariantKey};
use crate::CubicError;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CubicType {
    Smooth(InvariantKey),
    Node,
    Cusp,
    ConicSecant,
    ConicTangent,
    Triangle,
    ConcurrentLines,
    DoubleLinePlusLine,
    TripleLine,
    Zero,
}

impl CubicType {
    pub fn name(&self) -> &'static str {
        match self {
            CubicType::Smooth(_) => "Smooth",
            CubicType::Node => "Node",
            CubicType::Cusp => "Cusp",
            CubicType::ConicSecant => "ConicSecant",
            CubicType::ConicTangent => "ConicTangent",
            CubicType::Triangle => "Triangle",
            CubicType::ConcurrentLines => "ConcurrentLines",
            CubicType::DoubleLinePlusLine => "DoubleLinePlusLine",
            CubicType::TripleLine => "TripleLine",
            CubicType::Zero => "Zero",
        }
    }

    pub fn is_smooth(&self) -> bool {
        matches!(self, CubicType::Smooth(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            CubicType::Smooth(k) => json!({"type": "Smooth", "key": [k.0[0].to_string(), k.0[1].to_string()]}),
            other => json!({"type": other.name()}),
        }
    }
}

impl fmt::Display for CubicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubicType::Smooth(k) => write!(f, "Smooth{k}"),
            other => f.write_str(other.name()),
        }
    }
}

/// Determinant of the matrix of second partials.
pub fn hessian_cubic(f: &HForm) -> HForm {
    form_det3(&hessian_matrix(f)).expect("second partials share a degree")
}

/// Directions `v` with `sum v_i dF/dx_i = 0`; nonzero exactly for cones.
pub fn vertex_space(f: &HForm) -> Vec<Vec<Scalar>> {
    let cols: Vec<Vec<Scalar>> = f.gradient().iter().map(HForm::to_vector).collect();
    Matrix::from_cols(&cols).kernel()
}

/// Multiplicities of the lines of a cone, read off as a binary cubic through the vertex.
pub fn cone_pattern(f: &HForm) -> Result<Vec<usize>, CubicError> {
    let vertex = vertex_space(f).into_iter().next().ok_or(CubicError::NotACone)?;
    let units: Vec<Vec<Scalar>> =
        (0..3).map(|i| (0..3).map(|j| Scalar::int((i == j) as i64)).collect()).collect();
    let g = (0..3)
        .flat_map(|a| (a + 1..3).map(move |b| (a, b)))
        .map(|(a, b)| Matrix::from_cols(&[units[a].clone(), units[b].clone(), vertex.clone()]))
        .find(|g| !g.det().expect("square").is_zero())
        .expect("a nonzero vector extends to a basis");
    let binary = f.substitute(&g)?;
    let coeffs: Vec<Scalar> = (0..=3).map(|k| binary.coeff([k, 3 - k, 0])).collect();
    Ok(binary_pattern(3, &UPoly::new(coeffs))?)
}

pub fn classify_cubic(g: &HForm) -> Result<CubicType, CubicError> {
    classify_cubic_with_seed(g, DEFAULT_SEED)
}

pub fn classify_cubic_with_seed(g: &HForm, seed: u64) -> Result<CubicType, CubicError> {
    if g.is_zero() {
        return Ok(CubicType::Zero);
    }
    if g.degree() != 3 {
        return Err(CubicError::NotACubic(g.degree()));
    }
    if hessian_cubic(g).is_zero() {
        return Ok(match cone_pattern(g)?.as_slice() {
            [1, 1, 1] => CubicType::ConcurrentLines,
            [2, 1] => CubicType::DoubleLinePlusLine,
            _ => CubicType::TripleLine,
        });
    }
    let partials = g.gradient();
    let report = graded_report_auto(&partials)?;
    let length = match (report.dimension, report.length) {
        (Dimension::Zero, Length::Finite(l)) => l,
        _ => return Err(CubicError::UnclassifiedCubic(format!("singular locus of {g} is not finite"))),
    };
    if length == 0 {
        let key = aronhold(g).key.ok_or_else(|| CubicError::UnclassifiedCubic("S and T both vanish".into()))?;
        return Ok(CubicType::Smooth(key));
    }
    let n = support_count(&partials, seed)?;
    match (n, length) {
        (1, 1) => Ok(CubicType::Node),
        (1, 2) => Ok(CubicType::Cusp),
        (1, 3) => Ok(CubicType::ConicTangent),
        (2, 2) => Ok(CubicType::ConicSecant),
        (3, 3) => Ok(CubicType::Triangle),
        (n, l) => Err(CubicError::UnclassifiedCubic(format!("{n} singular points of total length {l}"))),
    }
}
