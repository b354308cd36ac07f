//! Flat deformations of graded Artinian algebras of Hilbert function (1,3,3) and (1,r,2) to
//! algebras with a split simple point, checked through truncated affine codimensions.

mod affine;
mod mpoly;
mod onr2;
mod report;
mod smoothing;

pub use affine::{jacobian_rank, AffineIdeal, Quotient, MAX_TRUNCATION};
pub use mpoly::{monomials_of_degree, var_name, Exponent, MPoly};
pub use onr2::{build_1r2, expected_syzygy_count, verify_deformation_1r2, Generator, OneR2, Relation, Syzygy, Term};
pub use report::{Clause, Report};
pub use smoothing::{smoothing_generators, smoothing_points, verify_smoothing_133};

use conet_kernel::KernelError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeformError {
    #[error("InvalidParameters: {0}")]
    InvalidParameters(String),
    #[error("VerificationFailure: {0}")]
    VerificationFailure(String),
    #[error("truncated codimension did not stabilize by degree {0}")]
    Indeterminate(u32),
    #[error("GenericityFailure")]
    GenericityFailure,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
