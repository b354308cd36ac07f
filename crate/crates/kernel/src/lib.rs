//! Exact arithmetic over Q and Q(w) together with the linear algebra the rest of the
//! workspace is built on.

mod echelon;
mod matrix;
mod roots;
mod scalar;
mod upoly;

pub use echelon::{SparseEchelon, SparseVec};
pub use matrix::{Matrix, Solution};
pub use roots::roots_in_field;
pub use scalar::Scalar;
pub use upoly::{binary_pattern, UPoly};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("InconsistentSystem")]
    InconsistentSystem,
    #[error("NonSquare")]
    NonSquare,
    #[error("ZeroForm")]
    ZeroForm,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}
