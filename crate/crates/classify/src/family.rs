//! One-parameter families and the specializations they witness.

use std::str::FromStr;

use conet_conics::{graded_report_auto, orbit_dimension, Length, LinearSystem};
use conet_cubics::{classify_cubic_with_seed, InvariantKey};
use conet_kernel::Scalar;
use conet_poly::{parse_form_with, HForm, Vars};

use crate::{classify_pencil, net_type, ClassifyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Pencil,
    Net,
    Cubic,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Pencil => "pencil",
            FamilyKind::Net => "net",
            FamilyKind::Cubic => "cubic",
        }
    }

    fn degree(self) -> u32 {
        match self {
            FamilyKind::Cubic => 3,
            _ => 2,
        }
    }
}

impl FromStr for FamilyKind {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pencil" => Ok(FamilyKind::Pencil),
            "net" => Ok(FamilyKind::Net),
            "cubic" => Ok(FamilyKind::Cubic),
            other => Err(ClassifyError::InvalidInput(format!("unknown family kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub id: String,
    pub kind: FamilyKind,
    pub param: String,
    /// Generators as expressions in `X, Y, Z` and the parameter.
    pub generators: Vec<String>,
    pub expected_generic: String,
    pub expected_special: String,
    pub special_value: Scalar,
    /// Whether the smooth generic members are expected to share one invariant key.
    pub j_constant: bool,
}

impl FamilySpec {
    pub fn instantiate(&self, value: &Scalar) -> Result<Vec<HForm>, ClassifyError> {
        let params = [(self.param.as_str(), value.clone())];
        self.generators
            .iter()
            .map(|g| Ok(parse_form_with(g, Vars::Xyz, &params, Some(self.kind.degree()))?))
            .collect()
    }
}

/// Label and the two semicontinuous invariants of one member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberClass {
    pub label: String,
    pub key: Option<InvariantKey>,
    pub orbit_dim: usize,
    pub length: Length,
}

pub fn classify_member(kind: FamilyKind, forms: &[HForm], seed: u64) -> Result<MemberClass, ClassifyError> {
    match kind {
        FamilyKind::Pencil => {
            let u = LinearSystem::with_degree(2, forms)?;
            Ok(MemberClass {
                label: classify_pencil(&u)?.as_str().into(),
                key: None,
                orbit_dim: orbit_dimension(&u),
                length: graded_report_auto(u.basis())?.length,
            })
        }
        FamilyKind::Net => {
            let v = LinearSystem::with_degree(2, forms)?;
            let t = net_type(&v, seed)?;
            Ok(MemberClass {
                label: t.orbit.label.as_str().into(),
                key: t.orbit.key,
                orbit_dim: t.orbit_dim,
                length: graded_report_auto(v.basis())?.length,
            })
        }
        FamilyKind::Cubic => {
            let [c] = forms else {
                return Err(ClassifyError::InvalidInput("a cubic family has one generator".into()));
            };
            let t = classify_cubic_with_seed(c, seed)?;
            let key = match &t {
                conet_cubics::CubicType::Smooth(k) => Some(k.clone()),
                _ => None,
            };
            Ok(MemberClass {
                label: t.name().into(),
                key,
                orbit_dim: orbit_dimension(&LinearSystem::with_degree(3, forms)?),
                length: graded_report_auto(&c.gradient())?.length,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub id: String,
    pub pass: bool,
    pub generic: Vec<MemberClass>,
    pub special: MemberClass,
    pub keys_equal: Option<bool>,
    pub dim_drop_ok: bool,
    pub length_monotone_ok: bool,
    /// The first sample whose class differs from the expectation.
    pub offending: Option<Scalar>,
}

impl FamilyReport {
    pub fn generic_labels(&self) -> Vec<&str> {
        self.generic.iter().map(|m| m.label.as_str()).collect()
    }

    pub fn into_result(self) -> Result<FamilyReport, ClassifyError> {
        if self.pass {
            Ok(self)
        } else {
            let at = self.offending.as_ref().map_or_else(|| "special value".to_string(), |s| s.to_string());
            Err(ClassifyError::FamilyMismatch(format!("{} at {at}", self.id)))
        }
    }
}

pub fn verify_family(spec: &FamilySpec, samples: &[Scalar], seed: u64) -> Result<FamilyReport, ClassifyError> {
    if samples.iter().any(|s| *s == spec.special_value) {
        return Err(ClassifyError::InvalidInput("a generic sample equals the special value".into()));
    }
    let mut generic = Vec::with_capacity(samples.len());
    for s in samples {
        generic.push(classify_member(spec.kind, &spec.instantiate(s)?, seed)?);
    }
    let special = classify_member(spec.kind, &spec.instantiate(&spec.special_value)?, seed)?;
    let offending = generic.iter().zip(samples).find(|(m, _)| m.label != spec.expected_generic).map(|(_, s)| s.clone());
    let keys_equal = spec.j_constant.then(|| generic.windows(2).all(|w| w[0].key.is_some() && w[0].key == w[1].key));
    let dim_drop_ok = generic.iter().all(|m| special.orbit_dim < m.orbit_dim);
    let length_monotone_ok = generic.iter().all(|m| special.length >= m.length);
    let pass = offending.is_none()
        && special.label == spec.expected_special
        && keys_equal != Some(false)
        && dim_drop_ok
        && length_monotone_ok;
    Ok(FamilyReport { id: spec.id.clone(), pass, generic, special, keys_equal, dim_drop_ok, length_monotone_ok, offending })
}
