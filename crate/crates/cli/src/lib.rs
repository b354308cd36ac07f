//! The `conet` command line: `conet <verb> <subject> [options]`, JSON with sorted keys on stdout.
//!
//! Exit codes: 0 success, 1 classification error, 2 failed verification, 3 malformed input.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use conet_classify::{
    classify_net, classify_pencil, dual_pairs_check, hesse_duality_check, net_type, verify_corpus, verify_families,
    verify_pencil_table, verify_table4, verify_table5, verify_table7, Check, ClassifyError,
};
use conet_conics::{
    discriminant_cubic, forms_from_json, graded_quotient_report, orbit_dimension, orthogonal_complement, ConicError,
    LinearSystem,
};
use conet_cubics::{apolar_generators, classify_cubic_with_seed, hessian_cubic, jacobian_preimage, CubicError};
use conet_deform::{verify_deformation_1r2, verify_smoothing_133, DeformError, Report};
use conet_kernel::{KernelError, Scalar};
use conet_poly::{form_from_json, form_to_json, HForm, PolyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Classify,
    Dual,
    Gamma,
    Preimage,
    Hessian,
    Apolar,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Subject {
    Net,
    Pencil,
    Cubic,
    Tables,
    Specializations,
    Smoothing,
    Onr2,
}

#[derive(Debug, Parser)]
#[command(name = "conet", version, about = "Nets and pencils of conics, plane cubics and their deformations")]
pub struct Command {
    pub verb: Verb,
    pub subject: Subject,
    /// Input system or cubic as JSON.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Highest degree inspected when certifying the Hilbert function.
    #[arg(long)]
    pub probe_degree: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Comma-separated scalars.
    #[arg(long, allow_hyphen_values = true)]
    pub lambdas: Option<String>,
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub name: String,
    pub message: String,
}

impl Failure {
    fn input(name: &str, message: impl Into<String>) -> Self {
        Failure { code: 3, name: name.into(), message: message.into() }
    }

    fn classification(name: &str, message: impl Into<String>) -> Self {
        Failure { code: 1, name: name.into(), message: message.into() }
    }
}

fn kernel_failure(e: &KernelError) -> Failure {
    match e {
        KernelError::Parse(_) => Failure::input("ParseError", e.to_string()),
        _ => Failure::classification("KernelError", e.to_string()),
    }
}

fn poly_failure(e: &PolyError) -> Failure {
    match e {
        PolyError::Kernel(k) => kernel_failure(k),
        PolyError::Parse(_) => Failure::input("ParseError", e.to_string()),
        PolyError::NotHomogeneous => Failure::input("NotHomogeneous", e.to_string()),
        PolyError::DegreeMismatch => Failure::input("DegreeMismatch", e.to_string()),
        PolyError::ZeroForm => Failure::input("ZeroForm", e.to_string()),
        PolyError::SingularSubstitution => Failure::classification("SingularSubstitution", e.to_string()),
    }
}

impl From<ConicError> for Failure {
    fn from(e: ConicError) -> Self {
        match &e {
            ConicError::NotThreeDimensional(_) => Failure::input("NotThreeDimensional", e.to_string()),
            ConicError::Input(_) => Failure::input("InvalidInput", e.to_string()),
            ConicError::Indeterminate(_) => Failure::classification("Indeterminate", e.to_string()),
            ConicError::GenericityFailure => Failure::classification("GenericityFailure", e.to_string()),
            ConicError::Poly(p) => poly_failure(p),
            ConicError::Kernel(k) => kernel_failure(k),
        }
    }
}

impl From<CubicError> for Failure {
    fn from(e: CubicError) -> Self {
        match e {
            CubicError::NotACubic(_) => Failure::input("NotACubic", e.to_string()),
            CubicError::Conic(c) => c.into(),
            CubicError::Poly(p) => poly_failure(&p),
            CubicError::Kernel(k) => kernel_failure(&k),
            CubicError::UnclassifiedCubic(_) => Failure::classification("UnclassifiedCubic", e.to_string()),
            CubicError::NotACone => Failure::classification("NotACone", e.to_string()),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::NotThreeDimensional(_) => Failure::input("NotThreeDimensional", e.to_string()),
            ClassifyError::InvalidInput(_) => Failure::input("InvalidInput", e.to_string()),
            ClassifyError::InconsistentConfiguration(_) => {
                Failure::classification("InconsistentConfiguration", e.to_string())
            }
            ClassifyError::DualityMismatch(_) => Failure { code: 2, name: "DualityMismatch".into(), message: e.to_string() },
            ClassifyError::FamilyMismatch(_) => Failure { code: 2, name: "FamilyMismatch".into(), message: e.to_string() },
            ClassifyError::Conic(c) => c.into(),
            ClassifyError::Cubic(c) => c.into(),
            ClassifyError::Poly(p) => poly_failure(&p),
            ClassifyError::Kernel(k) => kernel_failure(&k),
        }
    }
}

impl From<DeformError> for Failure {
    fn from(e: DeformError) -> Self {
        match &e {
            DeformError::InvalidParameters(_) => Failure::input("InvalidParameters", e.to_string()),
            DeformError::VerificationFailure(_) => Failure { code: 2, name: "VerificationFailure".into(), message: e.to_string() },
            DeformError::Indeterminate(_) => Failure::classification("Indeterminate", e.to_string()),
            DeformError::GenericityFailure => Failure::classification("GenericityFailure", e.to_string()),
            DeformError::Kernel(k) => kernel_failure(k),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run(args: &[String]) -> Outcome {
    let cmd = match Command::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: 0, stdout: e.to_string() },
                _ => failure_outcome(Failure::input("InvalidArguments", e.to_string().trim_end())),
            };
        }
    };
    match execute(&cmd) {
        Ok((value, pass)) => Outcome { code: if pass { 0 } else { 2 }, stdout: render(&value) },
        Err(f) => failure_outcome(f),
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn failure_outcome(f: Failure) -> Outcome {
    Outcome { code: f.code, stdout: render(&json!({"error": f.name, "message": f.message})) }
}

/// The JSON result and whether it reports success.
pub fn execute(cmd: &Command) -> Result<(Value, bool), Failure> {
    use Subject::*;
    use Verb::*;
    match (cmd.verb, cmd.subject) {
        (Classify, Net) => classify_net_cmd(cmd),
        (Classify, Pencil) => {
            let u = read_system(cmd)?;
            let t = classify_pencil(&u)?;
            Ok((json!({"type": t.as_str(), "orbit_dim": orbit_dimension(&u)}), true))
        }
        (Classify, Cubic) => {
            let f = read_cubic(cmd)?;
            Ok((classify_cubic_with_seed(&f, cmd.seed)?.to_json(), true))
        }
        (Dual, Net) => {
            let v = read_net(cmd)?;
            let w = orthogonal_complement(&v)?;
            let orbit = net_type(&w, cmd.seed)?.orbit;
            let mut m = Map::new();
            m.insert("complement".into(), w.to_json());
            m.insert("orbit".into(), json!(orbit.label.as_str()));
            if let Some(k) = orbit.key {
                m.insert("key".into(), json!([k.0[0].to_string(), k.0[1].to_string()]));
            }
            Ok((Value::Object(m), true))
        }
        (Gamma, Net) => {
            let v = read_net(cmd)?;
            let gamma = discriminant_cubic(&v)?;
            let kind = classify_cubic_with_seed(&gamma.clone().with_vars(conet_poly::Vars::Xyz), cmd.seed)?;
            Ok((json!({"gamma": form_to_json(&gamma), "text": gamma.to_string(), "type": kind.to_json()}), true))
        }
        (Preimage, Net) => {
            let v = read_net(cmd)?;
            let p = jacobian_preimage(&v)?;
            let forms: Vec<Value> = p.basis().iter().map(form_to_json).collect();
            Ok((json!({"dim": p.dim(), "forms": forms}), true))
        }
        (Hessian, Cubic) => {
            let h = hessian_cubic(&read_cubic(cmd)?);
            Ok((json!({"hessian": form_to_json(&h), "text": h.to_string()}), true))
        }
        (Apolar, Cubic) => {
            let counts = apolar_generators(&read_cubic(cmd)?);
            let m: Map<String, Value> = counts.into_iter().map(|(d, n)| (d.to_string(), json!(n))).collect();
            Ok((json!({"generators": m}), true))
        }
        (Verify, Tables) => Ok(clauses(tables(cmd.seed)?)),
        (Verify, Specializations) => Ok(clauses(specializations(cmd.seed)?)),
        (Verify, Smoothing) => {
            let lambda = scalar_option(&cmd.lambda, "lambda", 1)?;
            let t = scalar_option(&cmd.t, "t", 1)?;
            Ok(report(verify_smoothing_133(&lambda, &t, cmd.seed)?))
        }
        (Verify, Onr2) => {
            let r = cmd.r.unwrap_or(4);
            let lambdas = match &cmd.lambdas {
                Some(s) => s.split(',').map(|x| parse_scalar(x.trim(), "lambdas")).collect::<Result<Vec<_>, _>>()?,
                None => (2..r.saturating_sub(1) as i64).map(Scalar::int).collect(),
            };
            let t = scalar_option(&cmd.t, "t", 1)?;
            Ok(report(verify_deformation_1r2(r, &lambdas, &t, cmd.seed)?))
        }
        (verb, subject) => Err(Failure::input(
            "UnsupportedCommand",
            format!("{verb:?} does not apply to {subject:?}").to_lowercase(),
        )),
    }
}

fn classify_net_cmd(cmd: &Command) -> Result<(Value, bool), Failure> {
    let v = read_system(cmd)?;
    let mut r = classify_net(&v, cmd.seed)?;
    if let Some(p) = cmd.probe_degree {
        r.scheme_length = graded_quotient_report(v.basis(), p)?.length;
    }
    Ok((r.to_json(), true))
}

fn parse_scalar(s: &str, flag: &str) -> Result<Scalar, Failure> {
    s.parse().map_err(|_| Failure::input("ParseError", format!("--{flag}: cannot parse {s:?} as a scalar")))
}

fn scalar_option(v: &Option<String>, flag: &str, default: i64) -> Result<Scalar, Failure> {
    v.as_deref().map_or(Ok(Scalar::int(default)), |s| parse_scalar(s, flag))
}

fn read_json(cmd: &Command) -> Result<Value, Failure> {
    let path = cmd.file.as_ref().ok_or_else(|| Failure::input("MissingFile", "--file is required"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input("UnreadableFile", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input("InvalidJson", e.to_string()))
}

fn read_system(cmd: &Command) -> Result<LinearSystem, Failure> {
    let forms = forms_from_json(&read_json(cmd)?)?;
    Ok(LinearSystem::new(&forms)?)
}

fn read_net(cmd: &Command) -> Result<LinearSystem, Failure> {
    let v = read_system(cmd)?;
    if v.degree() != 2 || v.dim() != 3 {
        return Err(ConicError::NotThreeDimensional(v.dim()).into());
    }
    Ok(v)
}

/// A bare form, or a system file holding a single form.
fn read_cubic(cmd: &Command) -> Result<HForm, Failure> {
    let v = read_json(cmd)?;
    let f = if v.get("forms").is_some() {
        let forms = forms_from_json(&v)?;
        match forms.as_slice() {
            [f] => f.clone(),
            _ => return Err(Failure::input("InvalidInput", "expected exactly one form")),
        }
    } else {
        form_from_json(&v).map_err(|e| poly_failure(&e))?
    };
    if f.degree() != 3 {
        return Err(CubicError::NotACubic(f.degree()).into());
    }
    Ok(f)
}

fn tables(seed: u64) -> Result<Vec<Check>, Failure> {
    let mut out = verify_corpus(seed);
    out.extend(verify_pencil_table());
    out.extend(verify_table4(seed));
    out.extend(verify_table5());
    out.extend(verify_table7(seed));
    let duality = match dual_pairs_check(seed) {
        Ok(pairs) => {
            let listed: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}<->{b}")).collect();
            Check { name: "duality involution".into(), pass: true, detail: listed.join(" ") }
        }
        Err(e @ ClassifyError::DualityMismatch(_)) => {
            Check { name: "duality involution".into(), pass: false, detail: e.to_string() }
        }
        Err(e) => return Err(e.into()),
    };
    out.push(duality);
    for l in [1, 3, -2] {
        out.push(hesse_duality_check(&Scalar::int(l), seed)?);
    }
    Ok(out)
}

fn specializations(seed: u64) -> Result<Vec<Check>, Failure> {
    Ok(verify_families(None, seed)?
        .into_iter()
        .map(|r| {
            let detail = format!(
                "generic {} special {}{}",
                r.generic_labels().join(","),
                r.special.label,
                r.keys_equal.map_or(String::new(), |k| format!(" keys equal {k}"))
            );
            Check { name: r.id, pass: r.pass, detail }
        })
        .collect())
}

fn clauses(checks: Vec<Check>) -> (Value, bool) {
    let pass = checks.iter().all(|c| c.pass);
    (json!({"clauses": checks.iter().map(Check::to_json).collect::<Vec<_>>()}), pass)
}

fn report(r: Report) -> (Value, bool) {
    (r.to_json(), r.pass())
}
