//! Nets spanned by the partial derivatives of a cubic, and the reverse problem.

use conet_conics::{dual_pairing, orthogonal_complement, ConicError, LinearSystem};
use conet_kernel::{Matrix, Scalar};
use conet_poly::{monomials, HForm};

/// Span of the three partials; its dimension drops below 3 for cones.
pub fn jacobian_net(f: &HForm) -> LinearSystem {
    LinearSystem::with_degree(2, &f.gradient()).expect("partials of a cubic are conics")
}

/// All cubics whose partials lie in `net`, as a linear system of degree 3.
pub fn jacobian_preimage(net: &LinearSystem) -> Result<LinearSystem, ConicError> {
    if net.degree() != 2 {
        return Err(ConicError::Input("expected a system of conics".into()));
    }
    let complement = orthogonal_complement(net)?;
    let cubics: Vec<HForm> = monomials(3).into_iter().map(|e| HForm::monomial(e, Scalar::one())).collect();
    let mut rows = Vec::new();
    for i in 0..3 {
        for w in complement.basis() {
            rows.push(cubics.iter().map(|m| dual_pairing(&m.derivative(i), w)).collect());
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(cubics.len()).entries().chunks(cubics.len()).map(<[Scalar]>::to_vec).collect()
    } else {
        Matrix::from_rows(rows).kernel()
    };
    let forms: Vec<HForm> = kernel.iter().map(|v| HForm::from_vector(3, v)).collect();
    LinearSystem::with_degree(3, &forms)
}
