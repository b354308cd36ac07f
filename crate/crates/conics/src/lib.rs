//! Pencils and nets of plane conics as exact linear systems, with the invariants used to
//! tell their orbits apart.

mod graded;
mod locus;
mod support;
mod system;

pub use graded::{
    graded_quotient_report, graded_report_auto, macaulay_upper, Dimension, GradedIdeal, Length, SchemeReport,
    DEFAULT_PROBE, RAISED_PROBE,
};
pub use locus::{member, rank_one_locus, rank_one_minors, RankOneLocus};
pub use support::{scheme_points, support_count, PointSet, SchemePoint};
pub use system::{
    discriminant_cubic, discriminant_of, dual_coordinates, dual_pairing, forms_from_json, orbit_dimension,
    orthogonal_complement, pencil_matrix, LinearSystem, DUAL_ORDER, DUAL_WEIGHTS,
};

use conet_kernel::KernelError;
use conet_poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConicError {
    #[error("expected a net, got a system of dimension {0}")]
    NotThreeDimensional(usize),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("Indeterminate: no stable pattern up to degree {0}")]
    Indeterminate(usize),
    #[error("GenericityFailure")]
    GenericityFailure,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
