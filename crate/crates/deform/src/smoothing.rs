//! The family `A_t` deforming a graded algebra of Hilbert function (1,3,3) to `k[X,Y]/(X^2,Y^2) x k^3`.

use conet_kernel::Scalar;

use crate::affine::{jacobian_rank, AffineIdeal};
use crate::mpoly::MPoly;
use crate::report::{Clause, Report};
use crate::DeformError;

fn xyz() -> [MPoly; 3] {
    std::array::from_fn(|i| MPoly::var(3, i))
}

/// Generators `Y^2+lXZ, Z^2+lXY, X^2+lYZ+tX, XYZ+l^2 t/(1+l^3) X^2`.
pub fn smoothing_generators(lambda: &Scalar, t: &Scalar) -> Result<Vec<MPoly>, DeformError> {
    let denom = (Scalar::one() + lambda.pow(3)).inv().ok_or_else(|| invalid("1 + lambda^3 must be nonzero"))?;
    let [x, y, z] = xyz();
    Ok(vec![
        y.mul(&y).add(&x.mul(&z).scale(lambda)),
        z.mul(&z).add(&x.mul(&y).scale(lambda)),
        x.mul(&x).add(&y.mul(&z).scale(lambda)).add(&x.scale(t)),
        x.mul(&y).mul(&z).add(&x.mul(&x).scale(&(lambda.pow(2) * t * denom))),
    ])
}

/// The origin followed by the three points `(-t, l j^k t, l j^{2k} t) / (1+l^3)`.
pub fn smoothing_points(lambda: &Scalar, t: &Scalar) -> Result<Vec<[Scalar; 3]>, DeformError> {
    let denom = (Scalar::one() + lambda.pow(3)).inv().ok_or_else(|| invalid("1 + lambda^3 must be nonzero"))?;
    let a = -(t * &denom);
    let b = lambda * t * &denom;
    let mut pts = vec![[Scalar::zero(), Scalar::zero(), Scalar::zero()]];
    for k in 0..3 {
        let j = Scalar::omega().pow(k);
        pts.push([a.clone(), &b * &j, &b * &j.pow(2)]);
    }
    Ok(pts)
}

fn invalid(msg: &str) -> DeformError {
    DeformError::InvalidParameters(msg.into())
}

fn point_text(p: &[Scalar]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn verify_smoothing_133(lambda: &Scalar, t: &Scalar, seed: u64) -> Result<Report, DeformError> {
    if lambda.is_zero() || t.is_zero() {
        return Err(invalid("lambda and t must be nonzero"));
    }
    let gens = smoothing_generators(lambda, t)?;
    let points = smoothing_points(lambda, t)?;
    let mut report = Report::default();

    let vanish = points.iter().all(|p| gens.iter().all(|g| g.evaluate(p).is_zero()));
    let listed: Vec<String> = points.iter().map(|p| point_text(p)).collect();
    report.push(Clause::new("zero_points", vanish, listed.join(" ")));

    let ranks: Vec<usize> = points[1..].iter().map(|p| jacobian_rank(&gens, p)).collect();
    report.push(Clause::new("simple_points", ranks.iter().all(|&r| r == 3), format!("jacobian ranks {ranks:?}")));

    let ideal = AffineIdeal::new(3, gens)?;
    let codims = ideal.codimensions(crate::affine::MAX_TRUNCATION)?;
    let length = *codims.last().expect("nonempty");
    report.push(Clause::new("affine_length", length == 7, format!("truncated codimensions {codims:?}")));

    let local = ideal.quotient()?.local_lengths(seed)?;
    let origin = local.iter().find(|(p, _)| p.iter().all(Scalar::is_zero)).map(|(_, m)| *m);
    let found: Vec<String> = local.iter().map(|(p, m)| format!("{}:{m}", point_text(p))).collect();
    let ok = origin == Some(4) && local.len() == 4 && local.iter().filter(|(_, m)| *m == 1).count() == 3;
    report.push(Clause::new("local_lengths", ok, found.join(" ")));

    let special = AffineIdeal::new(3, smoothing_generators(lambda, &Scalar::zero())?)?;
    let hf = special.graded_hilbert(4)?;
    report.push(Clause::new("graded_hf_t0", hf == [1, 3, 3, 0, 0], format!("hilbert function {hf:?}")));

    let l0 = special.length()?;
    report.push(Clause::new("length_conserved", l0 == length, format!("length {l0} at t = 0 and {length} at t = {t}")));
    Ok(report)
}
