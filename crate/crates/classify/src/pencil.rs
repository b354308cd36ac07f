//! Pencils of conics.

use conet_conics::{discriminant_of, rank_one_minors, LinearSystem};
use conet_kernel::{binary_pattern, Scalar, UPoly};
use conet_poly::HForm;

use crate::{ClassifyError, PencilType};

/// A binary form in `A, B` as a polynomial in `A/B`.
fn dehomogenize(f: &HForm) -> UPoly {
    let d = f.degree();
    UPoly::new((0..=d).map(|k| f.coeff([k, d - k, 0])).collect())
}

fn member(u: &LinearSystem, p: &[Scalar; 2]) -> HForm {
    u.basis()[0].scale(&p[0]).add(&u.basis()[1].scale(&p[1]))
}

/// The point `(A : B)` of a root of multiplicity at least two of the binary cubic `f`.
fn repeated_root(f: &HForm) -> [Scalar; 2] {
    let g = dehomogenize(f);
    if g.degree().unwrap_or(0) + 2 <= 3 {
        return [Scalar::one(), Scalar::zero()];
    }
    let (factor, _) = g
        .squarefree_decomposition()
        .into_iter()
        .find(|(_, m)| *m >= 2)
        .expect("pattern has a repeated root");
    let monic = factor.monic();
    [-monic.coeff(0), Scalar::one()]
}

pub fn classify_pencil(u: &LinearSystem) -> Result<PencilType, ClassifyError> {
    if u.degree() != 2 || u.dim() != 2 {
        return Err(ClassifyError::InvalidInput(format!("expected a pencil of conics, got dimension {}", u.dim())));
    }
    let d = discriminant_of(u.basis());
    if !d.is_zero() {
        let pattern = binary_pattern(3, &dehomogenize(&d))?;
        if pattern == [1, 1, 1] {
            return Ok(PencilType::A);
        }
        let rank = member(u, &repeated_root(&d)).conic_matrix().rank();
        return Ok(match (pattern.as_slice(), rank) {
            ([2, 1], 2) => PencilType::B,
            ([2, 1], _) => PencilType::C,
            (_, 2) => PencilType::D,
            _ => PencilType::E,
        });
    }
    let minors: Vec<HForm> = rank_one_minors(u.basis()).into_iter().filter(|m| !m.is_zero()).collect();
    let common = minors.iter().map(dehomogenize).reduce(|a, b| a.gcd(&b)).expect("a pencil is not all double lines");
    let at_infinity = minors.iter().all(|m| m.coeff([2, 0, 0]).is_zero());
    match common.distinct_root_count() + at_infinity as usize {
        0 => Ok(PencilType::F),
        1 => Ok(PencilType::G),
        2 => Ok(PencilType::H),
        n => Err(ClassifyError::InconsistentConfiguration(format!("{n} double lines on a singular pencil"))),
    }
}
