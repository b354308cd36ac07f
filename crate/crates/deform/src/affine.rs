//! Affine ideals through truncations: the span of generator multiples of degree at most `D`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conet_kernel::{roots_in_field, Matrix, Scalar, SparseEchelon, SparseVec};

use crate::mpoly::{monomials_of_degree, Exponent, MPoly};
use crate::DeformError;

pub const MAX_TRUNCATION: u32 = 8;
const MAX_DRAW_PAIRS: usize = 8;
const DRAW_RANGE: i64 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineIdeal {
    nvars: usize,
    gens: Vec<MPoly>,
}

/// Columns of `R_{<=D}`, highest degree first so that standard monomials have low degree.
struct Truncation {
    monos: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
    span: SparseEchelon,
}

impl Truncation {
    fn vector(&self, p: &MPoly) -> SparseVec {
        p.terms().map(|(e, c)| (self.index[e], c.clone())).collect()
    }

    fn codimension(&self) -> usize {
        self.monos.len() - self.span.rank()
    }
}

impl AffineIdeal {
    pub fn new(nvars: usize, gens: Vec<MPoly>) -> Result<Self, DeformError> {
        if gens.iter().any(|g| g.is_zero() || g.nvars() != nvars) {
            return Err(DeformError::InvalidParameters("generators must be nonzero polynomials in the ring".into()));
        }
        Ok(AffineIdeal { nvars, gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.gens
    }

    fn truncation(&self, d: u32) -> Truncation {
        let monos: Vec<Exponent> = (0..=d).rev().flat_map(|k| monomials_of_degree(self.nvars, k)).collect();
        let index = monos.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let mut t = Truncation { span: SparseEchelon::new(monos.len()), monos, index };
        for g in &self.gens {
            let e = g.degree().unwrap_or(0);
            if e > d {
                continue;
            }
            for k in 0..=d - e {
                for m in monomials_of_degree(self.nvars, k) {
                    let row = t.vector(&g.mul(&MPoly::monomial(m, Scalar::one())));
                    t.span.insert(row);
                }
            }
        }
        t
    }

    /// `dim R_{<=d}` minus the dimension of the span of generator multiples of degree at most `d`.
    pub fn truncated_codimension(&self, d: u32) -> usize {
        self.truncation(d).codimension()
    }

    /// Codimensions for `d = 0, 1, ...` up to the first degree where three consecutive values agree.
    pub fn codimensions(&self, max_degree: u32) -> Result<Vec<usize>, DeformError> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            out.push(self.truncated_codimension(d));
            if out.len() >= 3 && out[out.len() - 3..].windows(2).all(|w| w[0] == w[1]) {
                return Ok(out);
            }
        }
        Err(DeformError::Indeterminate(max_degree))
    }

    /// The stabilized truncated codimension, that is the length of the affine scheme.
    pub fn length(&self) -> Result<usize, DeformError> {
        Ok(*self.codimensions(MAX_TRUNCATION)?.last().expect("nonempty"))
    }

    /// Hilbert function of the quotient, for homogeneous generators.
    pub fn graded_hilbert(&self, upto: u32) -> Result<Vec<usize>, DeformError> {
        if !self.gens.iter().all(MPoly::is_homogeneous) {
            return Err(DeformError::InvalidParameters("graded Hilbert function needs homogeneous generators".into()));
        }
        let c: Vec<usize> = (0..=upto).map(|d| self.truncated_codimension(d)).collect();
        Ok((0..c.len()).map(|d| if d == 0 { c[0] } else { c[d] - c[d - 1] }).collect())
    }

    pub fn quotient(&self) -> Result<Quotient, DeformError> {
        let codims = self.codimensions(MAX_TRUNCATION)?;
        let d = codims.len() as u32 - 1;
        Quotient::new(self, d)
    }

    /// Number of distinct points of the affine scheme.
    pub fn support_count(&self, seed: u64) -> Result<usize, DeformError> {
        self.quotient()?.support_count(seed)
    }
}

/// The coordinate ring `R/I` with its multiplication operators.
pub struct Quotient {
    nvars: usize,
    basis: Vec<Exponent>,
    next: Truncation,
    next_free: Vec<usize>,
    inclusion_inverse: Matrix,
}

impl Quotient {
    fn new(ideal: &AffineIdeal, d: u32) -> Result<Self, DeformError> {
        let here = ideal.truncation(d);
        let next = ideal.truncation(d + 1);
        let basis: Vec<Exponent> = here.span.free_columns().into_iter().map(|c| here.monos[c].clone()).collect();
        let next_free = next.span.free_columns();
        let mut q = Quotient { nvars: ideal.nvars, basis, next, next_free, inclusion_inverse: Matrix::identity(0) };
        let one = MPoly::constant(q.nvars, Scalar::one());
        q.inclusion_inverse = q.raw(&one).inverse().ok_or(DeformError::Indeterminate(d + 1))?;
        Ok(q)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Multiplication by `p` from the standard monomials of degree at most `d` into the next truncation.
    fn raw(&self, p: &MPoly) -> Matrix {
        let mut m = Matrix::zeros(self.next_free.len(), self.basis.len());
        for (j, e) in self.basis.iter().enumerate() {
            let mut v = self.next.vector(&p.mul(&MPoly::monomial(e.clone(), Scalar::one())));
            self.next.span.reduce(&mut v);
            for (c, x) in v {
                let i = self.next_free.binary_search(&c).expect("normal form lives on standard monomials");
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Multiplication by a polynomial of degree at most one, as an endomorphism of `R/I`.
    pub fn multiplication(&self, p: &MPoly) -> Matrix {
        assert!(p.degree().unwrap_or(0) <= 1, "operators are built for linear polynomials");
        self.inclusion_inverse.mul(&self.raw(p))
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> MPoly {
        (0..self.nvars).fold(MPoly::zero(self.nvars), |acc, i| {
            acc.add(&MPoly::var(self.nvars, i).scale(&Scalar::int(rng.random_range(-DRAW_RANGE..=DRAW_RANGE))))
        })
    }

    fn distinct(&self, h: &MPoly) -> usize {
        self.multiplication(h).char_poly().expect("square").distinct_root_count()
    }

    pub fn support_count(&self, seed: u64) -> Result<usize, DeformError> {
        if self.dim() == 0 {
            return Ok(0);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_DRAW_PAIRS {
            let a = self.distinct(&self.draw(&mut rng));
            let b = self.distinct(&self.draw(&mut rng));
            if a == b {
                return Ok(a);
            }
        }
        Err(DeformError::GenericityFailure)
    }

    /// Points with coordinates in Q(w) and the lengths of the local rings there.
    pub fn local_lengths(&self, seed: u64) -> Result<Vec<(Vec<Scalar>, usize)>, DeformError> {
        let support = self.support_count(seed)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let separating = (0..4 * MAX_DRAW_PAIRS)
            .map(|_| self.multiplication(&self.draw(&mut rng)))
            .find(|t| t.char_poly().expect("square").distinct_root_count() == support)
            .ok_or(DeformError::GenericityFailure)?;
        let coords: Vec<Matrix> = (0..self.nvars).map(|i| self.multiplication(&MPoly::var(self.nvars, i))).collect();
        let n = self.dim();
        let mut out = Vec::new();
        for r in roots_in_field(&separating.char_poly().expect("square")) {
            let shifted = separating.sub(&Matrix::identity(n).scale(&r));
            let power = (1..n).fold(shifted.clone(), |acc, _| acc.mul(&shifted));
            let space = power.kernel();
            let dim = space.len();
            let b = Matrix::from_cols(&space);
            let point = coords
                .iter()
                .map(|t| {
                    let c = restrict(t, &b)?;
                    Ok((0..dim).map(|k| c[(k, k)].clone()).sum::<Scalar>() / Scalar::int(dim as i64))
                })
                .collect::<Result<Vec<_>, DeformError>>()?;
            out.push((point, dim));
        }
        if out.iter().map(|(_, m)| m).sum::<usize>() != n {
            return Err(DeformError::GenericityFailure);
        }
        out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| {
            a.0.iter().map(ToString::to_string).cmp(b.0.iter().map(ToString::to_string))
        }));
        Ok(out)
    }
}

fn restrict(t: &Matrix, b: &Matrix) -> Result<Matrix, DeformError> {
    let image = t.mul(b);
    let cols = (0..b.cols())
        .map(|k| {
            let sol = b.solve_linear(Some(&image.col(k))).map_err(|_| DeformError::GenericityFailure)?;
            sol.particular.ok_or(DeformError::GenericityFailure)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_cols(&cols))
}

/// Rank of the Jacobian matrix of `gens` at `point`.
pub fn jacobian_rank(gens: &[MPoly], point: &[Scalar]) -> usize {
    let n = point.len();
    let rows = gens.iter().map(|g| (0..n).map(|i| g.derivative(i).evaluate(point)).collect()).collect();
    Matrix::from_rows(rows).rank()
}
