//! Nets of conics: the orbit decision table and the full classification report.

use serde_json::{json, Map, Value};

use conet_conics::{
    discriminant_cubic, graded_report_auto, orbit_dimension, orthogonal_complement, rank_one_locus, Dimension, Length,
    LinearSystem,
};
use conet_cubics::{aronhold, classify_cubic_with_seed, jacobian_preimage, CubicType};
use conet_poly::Vars;

use crate::{ClassifyError, NetLabel, NetOrbit};

/// Closed points of the double-line locus, or a curve of double lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeltaSupport {
    Points(usize),
    Curve,
}

impl DeltaSupport {
    pub fn to_json(self) -> Value {
        match self {
            DeltaSupport::Points(n) => json!(n),
            DeltaSupport::Curve => json!("curve"),
        }
    }
}

/// The invariants that decide the orbit of a net.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetType {
    pub orbit: NetOrbit,
    pub gamma: CubicType,
    pub delta_support: DeltaSupport,
    pub orbit_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetReport {
    pub orbit: NetOrbit,
    pub gamma: CubicType,
    pub delta_support: DeltaSupport,
    pub orbit_dim: usize,
    pub scheme_length: Length,
    pub dual: NetOrbit,
    pub preimage_dim: usize,
}

impl NetReport {
    /// JSON object with sorted keys; `key` is present for the smooth family only.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("orbit".into(), json!(self.orbit.label.as_str()));
        m.insert("gamma".into(), json!(self.gamma.name()));
        m.insert("delta_support".into(), self.delta_support.to_json());
        m.insert("orbit_dim".into(), json!(self.orbit_dim));
        m.insert("scheme_length".into(), length_json(self.scheme_length));
        m.insert("dual".into(), json!(self.dual.label.as_str()));
        m.insert("preimage_dim".into(), json!(self.preimage_dim));
        if let Some(k) = &self.orbit.key {
            m.insert("key".into(), json!([k.0[0].to_string(), k.0[1].to_string()]));
        }
        Value::Object(m)
    }
}

pub fn length_json(l: Length) -> Value {
    match l {
        Length::Finite(n) => json!(n),
        Length::Infinite => json!("infinite"),
    }
}

fn inconsistent(gamma: &CubicType, delta: DeltaSupport) -> ClassifyError {
    ClassifyError::InconsistentConfiguration(format!("discriminant {} with double-line locus {delta:?}", gamma.name()))
}

/// Orbit of a net from its discriminant cubic and double-line locus.
pub fn net_type(v: &LinearSystem, seed: u64) -> Result<NetType, ClassifyError> {
    if v.degree() != 2 || v.dim() != 3 {
        return Err(ClassifyError::NotThreeDimensional(v.dim()));
    }
    let gamma_form = discriminant_cubic(v)?;
    let gamma = classify_cubic_with_seed(&gamma_form.clone().with_vars(Vars::Xyz), seed)?;
    let locus = rank_one_locus(v, seed)?;
    let delta = match locus.report.dimension {
        Dimension::One => DeltaSupport::Curve,
        _ => DeltaSupport::Points(locus.report.support_count.unwrap_or(0)),
    };
    let grad = gamma_form.gradient();
    for p in &locus.points {
        let singular = gamma_form.evaluate(&p.coords).is_zero()
            && grad.iter().all(|g| g.is_zero() || g.evaluate(&p.coords).is_zero());
        if !singular {
            return Err(ClassifyError::InconsistentConfiguration("a double line is a smooth point of the discriminant".into()));
        }
    }
    let orbit_dim = orbit_dimension(v);
    use CubicType as C;
    use DeltaSupport::{Curve, Points};
    let label = match (&gamma, delta) {
        (C::Zero, Curve) => NetLabel::L2b,
        (C::Zero, Points(_)) => NetLabel::L2a,
        (C::Smooth(_), Points(0)) => NetLabel::L8b,
        (C::Node, Points(0)) => NetLabel::L8a,
        (C::Node, Points(1)) => NetLabel::L8c,
        (C::Cusp, Points(1)) => NetLabel::L7b,
        (C::ConicSecant, Points(0)) => NetLabel::L7a,
        (C::ConicSecant, Points(2)) => NetLabel::L7c,
        (C::ConicTangent, Points(1)) => NetLabel::L6b,
        (C::Triangle, Points(0)) => NetLabel::L6a,
        (C::Triangle, Points(3)) => NetLabel::L6d,
        (C::DoubleLinePlusLine, Points(1)) => NetLabel::L5a,
        (C::DoubleLinePlusLine, Points(2)) if orbit_dim == 6 => NetLabel::L6c,
        (C::DoubleLinePlusLine, Points(2)) if orbit_dim == 5 => NetLabel::L5b,
        (C::TripleLine, Points(1)) => NetLabel::L4,
        _ => return Err(inconsistent(&gamma, delta)),
    };
    let key = if label == NetLabel::L8b {
        let pre = jacobian_preimage(v)?;
        if pre.dim() != 1 {
            return Err(ClassifyError::InconsistentConfiguration(format!(
                "smooth discriminant with a {}-dimensional space of preimage cubics",
                pre.dim()
            )));
        }
        Some(aronhold(&pre.basis()[0]).key.ok_or_else(|| inconsistent(&gamma, delta))?)
    } else {
        None
    };
    Ok(NetType { orbit: NetOrbit { label, key }, gamma, delta_support: delta, orbit_dim })
}

pub fn classify_net(v: &LinearSystem, seed: u64) -> Result<NetReport, ClassifyError> {
    let t = net_type(v, seed)?;
    let dual = net_type(&orthogonal_complement(v)?, seed)?.orbit;
    let scheme_length = graded_report_auto(v.basis())?.length;
    let preimage_dim = jacobian_preimage(v)?.dim();
    Ok(NetReport {
        orbit: t.orbit,
        gamma: t.gamma,
        delta_support: t.delta_support,
        orbit_dim: t.orbit_dim,
        scheme_length,
        dual,
        preimage_dim,
    })
}
