//! Plane cubics: invariants, projective types, Jacobian nets and the Hesse pencil.

mod apolar;
mod aronhold;
mod classify;
mod hesse;
mod jacobian;

pub use apolar::{apolar_generators, contract};
pub use aronhold::{aronhold, discriminant_constant, s_invariant, t_invariant, Aronhold, CoefficientPolynomial, InvariantKey};
pub use classify::{classify_cubic, classify_cubic_with_seed, cone_pattern, hessian_cubic, vertex_space, CubicType, DEFAULT_SEED};
pub use hesse::{hesse_cubic, hesse_j, hesse_net_forms, hesse_pencil_facts, HesseFacts, HessePoint};
pub use jacobian::{jacobian_net, jacobian_preimage};

use conet_conics::ConicError;
use conet_kernel::KernelError;
use conet_poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CubicError {
    #[error("UnclassifiedCubic: {0}")]
    UnclassifiedCubic(String),
    #[error("expected a cubic, got degree {0}")]
    NotACubic(u32),
    #[error("the form is not a cone")]
    NotACone,
    #[error(transparent)]
    Conic(#[from] ConicError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
