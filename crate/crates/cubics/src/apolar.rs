//! Minimal generators of the apolar ideal of a cubic under contraction.

use std::collections::BTreeMap;

use conet_kernel::{Matrix, Scalar, SparseEchelon};
use conet_poly::{monomial_count, monomial_index, monomials, HForm};

/// Contraction `x^a . X^b = X^(b-a)`, zero unless `a <= b`.
pub fn contract(op: [u32; 3], f: &HForm) -> HForm {
    let d = f.degree() - op.iter().sum::<u32>();
    let terms = f.terms().filter(|(e, _)| (0..3).all(|i| e[i] >= op[i])).map(|(e, c)| {
        let rest: [u32; 3] = std::array::from_fn(|i| e[i] - op[i]);
        (rest, c.clone())
    });
    HForm::from_terms(d, terms).expect("homogeneous")
}

/// Degree `d` piece of the annihilator, as coefficient vectors over [`monomials`]`(d)`.
fn annihilator(f: &HForm, d: u32) -> Vec<Vec<Scalar>> {
    let deg = f.degree();
    if d > deg {
        return (0..monomial_count(d))
            .map(|i| (0..monomial_count(d)).map(|j| Scalar::int((i == j) as i64)).collect())
            .collect();
    }
    let cols: Vec<Vec<Scalar>> = monomials(d).into_iter().map(|op| contract(op, f).to_vector()).collect();
    Matrix::from_cols(&cols).kernel()
}

/// Number of minimal generators of `Ann(F)` in degrees 1 through 4.
pub fn apolar_generators(f: &HForm) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    let mut previous: Vec<Vec<Scalar>> = Vec::new();
    for d in 1..=4u32 {
        let ann = annihilator(f, d);
        let mut span = SparseEchelon::new(monomial_count(d));
        let lower = monomials(d - 1);
        for v in &previous {
            for var in 0..3 {
                let row = lower
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| {
                        let mut up = *e;
                        up[var] += 1;
                        (monomial_index(up), c.clone())
                    })
                    .collect();
                span.insert(row);
            }
        }
        out.insert(d, ann.len() - span.rank());
        previous = ann;
    }
    out
}
