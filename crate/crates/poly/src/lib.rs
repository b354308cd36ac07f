//! Homogeneous polynomial algebra in three variables over Q(w).

mod det;
mod form;
mod json;
mod parse;

pub use det::{eliminate, form_det, form_det3};
pub use form::{monomial_count, monomial_index, monomials, Exp, HForm, Vars};
pub use json::{form_from_json, form_to_json};
pub use parse::{f, parse_abc, parse_form, parse_form_with};

use conet_kernel::{KernelError, Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("NotHomogeneous")]
    NotHomogeneous,
    #[error("SingularSubstitution")]
    SingularSubstitution,
    #[error("DegreeMismatch")]
    DegreeMismatch,
    #[error("ZeroForm")]
    ZeroForm,
    #[error(transparent)]
    Kernel(KernelError),
}

/// Matrix of second partial derivatives.
pub fn hessian_matrix(f: &HForm) -> [[HForm; 3]; 3] {
    let g = f.gradient();
    std::array::from_fn(|i| std::array::from_fn(|j| g[i].derivative(j)))
}

/// `x_j * dF/dx_i`, the infinitesimal action of the elementary matrix `E_ij`.
pub fn lie_action(f: &HForm, i: usize, j: usize) -> HForm {
    HForm::var(j).mul(&f.derivative(i))
}

/// Square matrix from integer rows, shorthand for substitution matrices.
pub fn int_matrix(rows: [[i64; 3]; 3]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
}
