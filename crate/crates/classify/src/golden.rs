//! Embedded reference data: the normal-form corpus, the pencil table, the specialization
//! families, and the discriminant and polar-net tables, with checks against each.

use std::sync::OnceLock;

use serde_json::Value;

use conet_conics::{discriminant_of, graded_report_auto, orthogonal_complement, Length, LinearSystem};
use conet_cubics::{hesse_net_forms, hessian_cubic, jacobian_net};
use conet_kernel::Scalar;
use conet_poly::{parse_form_with, HForm, Vars};

use crate::{classify_pencil, net_type, verify_family, ClassifyError, FamilyKind, FamilyReport, FamilySpec, NetLabel, PencilType};

const GOLDEN: &str = include_str!("../data/golden.json");

fn golden() -> &'static Value {
    static DATA: OnceLock<Value> = OnceLock::new();
    DATA.get_or_init(|| serde_json::from_str(GOLDEN).expect("embedded data is valid JSON"))
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().expect("array").iter().map(|s| s.as_str().expect("string")).collect()
}

fn forms_with(v: &Value, params: &[(&str, Scalar)], vars: Vars) -> Vec<HForm> {
    strings(v).into_iter().map(|s| parse_form_with(s, vars, params, None).expect("embedded form")).collect()
}

fn scalars(v: Option<&Value>, default: &[i64]) -> Vec<Scalar> {
    match v {
        Some(v) => strings(v).into_iter().map(|s| s.parse().expect("embedded scalar")).collect(),
        None => default.iter().map(|&k| Scalar::int(k)).collect(),
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({"name": self.name, "pass": self.pass, "detail": self.detail})
    }
}

/// The fifteen normal forms with their generator lists.
pub fn corpus() -> Vec<(NetLabel, Vec<HForm>)> {
    golden()["corpus"]
        .as_array()
        .expect("corpus")
        .iter()
        .map(|e| (e["label"].as_str().unwrap().parse().unwrap(), forms_with(&e["forms"], &[], Vars::Xyz)))
        .collect()
}

pub fn corpus_net(label: NetLabel) -> LinearSystem {
    let (_, forms) = corpus().into_iter().find(|(l, _)| *l == label).expect("every label has a representative");
    LinearSystem::new(&forms).expect("representatives are nets")
}

/// Orbit dimensions of the corpus, in corpus order.
pub fn documented_orbit_dimensions() -> Vec<usize> {
    golden()["orbit_dimensions"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect()
}

/// The pencil normal forms with their orbit dimensions.
pub fn pencil_table() -> Vec<(PencilType, Vec<HForm>, usize)> {
    golden()["pencils"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["type"].as_str().unwrap().parse().unwrap(),
                forms_with(&e["forms"], &[], Vars::Xyz),
                e["orbit_dim"].as_u64().unwrap() as usize,
            )
        })
        .collect()
}

/// Every specialization family with its generic samples.
pub fn families() -> Vec<(FamilySpec, Vec<Scalar>)> {
    golden()["families"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let spec = FamilySpec {
                id: e["id"].as_str().unwrap().into(),
                kind: e["kind"].as_str().unwrap().parse().unwrap(),
                param: e["param"].as_str().unwrap().into(),
                generators: strings(&e["forms"]).into_iter().map(String::from).collect(),
                expected_generic: e["generic"].as_str().unwrap().into(),
                expected_special: e["special"].as_str().unwrap().into(),
                special_value: Scalar::zero(),
                j_constant: e.get("j_constant").and_then(Value::as_bool).unwrap_or(false),
            };
            (spec, scalars(e.get("samples"), &[2, 3, 5]))
        })
        .collect()
}

pub fn families_of(kind: FamilyKind) -> Vec<(FamilySpec, Vec<Scalar>)> {
    families().into_iter().filter(|(s, _)| s.kind == kind).collect()
}

pub fn verify_families(kind: Option<FamilyKind>, seed: u64) -> Result<Vec<FamilyReport>, ClassifyError> {
    families()
        .iter()
        .filter(|(s, _)| kind.is_none_or(|k| s.kind == k))
        .map(|(s, samples)| verify_family(s, samples, seed))
        .collect()
}

/// Whether `f` is a nonzero multiple of `g` after some permutation of the variables.
pub fn proportional_up_to_permutation(f: &HForm, g: &HForm) -> Option<[usize; 3]> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.into_iter().find(|p| !f.is_zero() && f.proportional(&g.permute(*p)))
}

pub fn verify_corpus(seed: u64) -> Vec<Check> {
    let mut out: Vec<Check> = corpus()
        .into_iter()
        .zip(documented_orbit_dimensions())
        .map(|((label, forms), dim)| {
            let net = LinearSystem::new(&forms).expect("net");
            match net_type(&net, seed) {
                Ok(t) => Check::new(
                    format!("corpus {label}"),
                    t.orbit.label == label && t.orbit_dim == dim,
                    format!("classified {} with orbit dimension {}", t.orbit.label, t.orbit_dim),
                ),
                Err(e) => Check::new(format!("corpus {label}"), false, e.to_string()),
            }
        })
        .collect();
    out.push(double_line_length());
    out
}

/// The base scheme of `<X^2, XY, Y^2>`, documented as not finite.
fn double_line_length() -> Check {
    let forms = ["X^2", "X*Y", "Y^2"].map(|s| parse_form_with(s, Vars::Xyz, &[], None).expect("form"));
    match graded_report_auto(&forms) {
        Ok(r) => Check::new(
            "length 2b",
            r.length == Length::Finite(3),
            format!(
                "hilbert function {:?} gives length {}, documented as not finite",
                &r.hf_prefix[..6],
                r.length
            ),
        ),
        Err(e) => Check::new("length 2b", false, e.to_string()),
    }
}

pub fn verify_pencil_table() -> Vec<Check> {
    pencil_table()
        .into_iter()
        .map(|(t, forms, _)| {
            let got = LinearSystem::new(&forms).map_err(ClassifyError::from).and_then(|u| classify_pencil(&u));
            match got {
                Ok(g) => Check::new(format!("pencil {t}"), g == t, format!("classified {g}")),
                Err(e) => Check::new(format!("pencil {t}"), false, e.to_string()),
            }
        })
        .collect()
}

fn table5_row(label: &str, forms: &[HForm], gamma: &HForm) -> Check {
    let d = discriminant_of(forms);
    match proportional_up_to_permutation(&d, gamma) {
        Some(p) => Check::new(format!("discriminant {label}"), true, format!("matches with variables permuted by {p:?}")),
        None => Check::new(format!("discriminant {label}"), false, format!("computed {d}")),
    }
}

pub fn verify_table5() -> Vec<Check> {
    let mut out = Vec::new();
    for row in golden()["table5"].as_array().unwrap() {
        let label = row["label"].as_str().unwrap();
        match row.get("param").and_then(Value::as_str) {
            Some(p) => {
                for s in scalars(row.get("samples"), &[1]) {
                    let params = [(p, s.clone())];
                    let forms = forms_with(&row["forms"], &params, Vars::Xyz);
                    let gamma = parse_form_with(row["gamma"].as_str().unwrap(), Vars::Abc, &params, None).unwrap();
                    out.push(table5_row(&format!("{label} ({p}={s})"), &forms, &gamma));
                }
            }
            None => {
                let forms = forms_with(&row["forms"], &[], Vars::Xyz);
                let gamma = parse_form_with(row["gamma"].as_str().unwrap(), Vars::Abc, &[], None).unwrap();
                out.push(table5_row(label, &forms, &gamma));
            }
        }
    }
    out
}

/// Rows of the polar-net table: the Jacobian net must land in the listed orbit. A printed
/// Hessian that disagrees with the computed determinant is noted in the detail only.
pub fn verify_table7(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for row in golden()["table7"].as_array().unwrap() {
        let label: NetLabel = row["label"].as_str().unwrap().parse().unwrap();
        let param = row.get("param").and_then(Value::as_str);
        let samples = match param {
            Some(_) => scalars(row.get("samples"), &[1]),
            None => vec![Scalar::zero()],
        };
        for s in samples {
            let params: Vec<(&str, Scalar)> = param.map(|p| (p, s.clone())).into_iter().collect();
            let parse = |k: &str| parse_form_with(row[k].as_str().unwrap(), Vars::Xyz, &params, None).unwrap();
            let (cubic, printed) = (parse("cubic"), parse("hessian"));
            let hess = hessian_cubic(&cubic);
            let hess_note = if hess.proportional(&printed) {
                "printed Hessian agrees".to_string()
            } else {
                format!("printed Hessian {} differs from computed {}", printed.normalized(), hess.normalized())
            };
            let name = match param {
                Some(p) => format!("polar net {label} ({p}={s})"),
                None => format!("polar net {label}"),
            };
            out.push(match net_type(&jacobian_net(&cubic), seed) {
                Ok(t) => Check::new(name, t.orbit.label == label, format!("classified {}; {hess_note}", t.orbit.label)),
                Err(e) => Check::new(name, false, e.to_string()),
            });
        }
    }
    out
}

/// Labels of each normal form and of its complement, checked against the documented involution.
pub fn dual_pairs_check(seed: u64) -> Result<Vec<(NetLabel, NetLabel)>, ClassifyError> {
    let mut out = Vec::new();
    for (label, forms) in corpus() {
        let net = LinearSystem::new(&forms)?;
        let dual = net_type(&orthogonal_complement(&net)?, seed)?.orbit.label;
        if dual != label.dual() {
            return Err(ClassifyError::DualityMismatch(format!("{label} has complement {dual}, expected {}", label.dual())));
        }
        out.push((label, dual));
    }
    Ok(out)
}

/// The Hesse net at `lambda` is dual to the Hesse net at `-2/lambda`: equal keys.
pub fn hesse_duality_check(lambda: &Scalar, seed: u64) -> Result<Check, ClassifyError> {
    let net = LinearSystem::new(&hesse_net_forms(lambda))?;
    let dual = net_type(&orthogonal_complement(&net)?, seed)?.orbit;
    let partner = -Scalar::int(2) / lambda;
    let expected = net_type(&LinearSystem::new(&hesse_net_forms(&partner))?, seed)?.orbit;
    Ok(Check::new(
        format!("Hesse duality at {lambda}"),
        dual == expected && dual.label == NetLabel::L8b,
        format!("complement {dual}, Hesse net at {partner}: {expected}"),
    ))
}

pub fn verify_table4(seed: u64) -> Vec<Check> {
    let mut out = match dual_pairs_check(seed) {
        Ok(pairs) => pairs
            .into_iter()
            .map(|(a, b)| Check::new(format!("dual {a}"), true, format!("complement is {b}")))
            .collect(),
        Err(e) => vec![Check::new("dual pairs", false, e.to_string())],
    };
    for lam in [1, 3, -2] {
        out.push(
            hesse_duality_check(&Scalar::int(lam), seed)
                .unwrap_or_else(|e| Check::new(format!("Hesse duality at {lam}"), false, e.to_string())),
        );
    }
    out
}
