//! Orbit classification of pencils and nets of conics, with the reference tables and
//! specialization families they are checked against.

mod family;
mod golden;
mod labels;
mod net;
mod pencil;

pub use family::{classify_member, verify_family, FamilyKind, FamilyReport, FamilySpec, MemberClass};
pub use golden::{
    corpus, corpus_net, documented_orbit_dimensions, dual_pairs_check, families, families_of, hesse_duality_check,
    pencil_table, proportional_up_to_permutation, verify_corpus, verify_families, verify_pencil_table, verify_table4,
    verify_table5, verify_table7, Check,
};
pub use labels::{NetLabel, NetOrbit, PencilType};
pub use net::{classify_net, length_json, net_type, DeltaSupport, NetReport, NetType};
pub use pencil::classify_pencil;

use conet_conics::ConicError;
use conet_cubics::CubicError;
use conet_kernel::KernelError;
use conet_poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("NotThreeDimensional: the system has dimension {0}")]
    NotThreeDimensional(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("InconsistentConfiguration: {0}")]
    InconsistentConfiguration(String),
    #[error("DualityMismatch: {0}")]
    DualityMismatch(String),
    #[error("FamilyMismatch: {0}")]
    FamilyMismatch(String),
    #[error(transparent)]
    Conic(#[from] ConicError),
    #[error(transparent)]
    Cubic(#[from] CubicError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
