//! The double-line locus: members of a net of rank at most one.

use conet_kernel::Scalar;
use conet_poly::{HForm, Vars};

use crate::graded::{graded_report_auto, Dimension, Length, SchemeReport};
use crate::support::{scheme_points, support_count, SchemePoint};
use crate::system::{pencil_matrix, LinearSystem};
use crate::ConicError;

/// The scheme of rank-one members, in the coordinates `A, B, C` of the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneLocus {
    pub report: SchemeReport,
    /// Support points with coordinates in Q(w), when the locus is finite.
    pub points: Vec<SchemePoint>,
}

/// The six 2x2 minors of the symmetric matrix of the net.
pub fn rank_one_minors(forms: &[HForm]) -> Vec<HForm> {
    let m = pencil_matrix(forms);
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut out = Vec::new();
    for (a, (r0, r1)) in pairs.iter().enumerate() {
        for (c0, c1) in pairs.iter().skip(a) {
            let minor = m[*r0][*c0].mul(&m[*r1][*c1]).sub(&m[*r0][*c1].mul(&m[*r1][*c0]));
            out.push(minor.with_vars(Vars::Abc));
        }
    }
    out
}

pub fn rank_one_locus(net: &LinearSystem, seed: u64) -> Result<RankOneLocus, ConicError> {
    if net.degree() != 2 || net.dim() != 3 {
        return Err(ConicError::NotThreeDimensional(net.dim()));
    }
    let minors = rank_one_minors(net.basis());
    let mut report = graded_report_auto(&minors)?;
    let mut points = Vec::new();
    if report.dimension == Dimension::Zero {
        if report.length == Length::Finite(0) {
            report.support_count = Some(0);
        } else {
            report.support_count = Some(support_count(&minors, seed)?);
            points = scheme_points(&minors, seed)?.points;
        }
    }
    Ok(RankOneLocus { report, points })
}

/// The member of the net with coordinates `p` in its canonical basis.
pub fn member(net: &LinearSystem, p: &[Scalar; 3]) -> HForm {
    net.basis().iter().zip(p).fold(HForm::zero(net.degree()), |acc, (b, c)| acc.add(&b.scale(c)))
}
