//! Points of zero-dimensional schemes through multiplication operators on a stable graded piece.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conet_kernel::{roots_in_field, Matrix, Scalar};
use conet_poly::{monomials, HForm};

use crate::graded::{report_for, Dimension, GradedIdeal, Length, DEFAULT_PROBE, RAISED_PROBE};
use crate::system::form_vec;
use crate::ConicError;

const MAX_DRAW_PAIRS: usize = 8;
const DRAW_RANGE: i64 = 20;

/// A closed point together with the length of the scheme there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemePoint {
    /// Projective coordinates with the first nonzero entry equal to 1.
    pub coords: [Scalar; 3],
    pub multiplicity: usize,
}

/// The support points with coordinates in Q(w); `complete` when they account for the whole length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub length: usize,
    pub points: Vec<SchemePoint>,
    pub complete: bool,
}

/// The quotient in a degree where it is isomorphic to the coordinate ring of the scheme.
struct StablePiece<'a> {
    ideal: &'a GradedIdeal,
    degree: usize,
    basis: Vec<[u32; 3]>,
    target: Vec<usize>,
}

impl<'a> StablePiece<'a> {
    fn new(ideal: &'a GradedIdeal, degree: usize) -> Self {
        let monos = monomials(degree as u32);
        let basis = ideal.piece(degree).free_columns().into_iter().map(|c| monos[c]).collect();
        let target = ideal.piece(degree + 1).free_columns();
        StablePiece { ideal, degree, basis, target }
    }

    fn len(&self) -> usize {
        self.basis.len()
    }

    /// Multiplication by a linear form, from degree `d` to degree `d + 1`.
    fn multiplication(&self, h: &HForm) -> Matrix {
        let next = self.ideal.piece(self.degree + 1);
        let n = self.len();
        let mut m = Matrix::zeros(self.target.len(), n);
        for (j, e) in self.basis.iter().enumerate() {
            let mut v = form_vec(&h.mul(&HForm::monomial(*e, Scalar::one())));
            next.reduce(&mut v);
            for (c, x) in v {
                let i = self.target.binary_search(&c).expect("normal form lives on standard monomials");
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Multiplication by `num / den` as an endomorphism, when `den` is a unit.
    fn ratio(&self, num: &HForm, den: &HForm) -> Option<Matrix> {
        let inv = self.multiplication(den).inverse()?;
        Some(inv.mul(&self.multiplication(num)))
    }
}

fn linear(c: [i64; 3]) -> HForm {
    HForm::from_vector(1, &c.map(Scalar::int))
}

fn draw(rng: &mut ChaCha8Rng) -> HForm {
    linear(std::array::from_fn(|_| rng.random_range(-DRAW_RANGE..=DRAW_RANGE)))
}

fn distinct_eigenvalues(t: &Matrix) -> usize {
    t.char_poly().expect("square").distinct_root_count()
}

fn zero_dimensional(ideal: &GradedIdeal) -> Result<(usize, usize), ConicError> {
    let report = report_for(ideal, DEFAULT_PROBE).or_else(|_| report_for(ideal, RAISED_PROBE))?;
    match (report.dimension, report.length) {
        (Dimension::Zero, Length::Finite(l)) => Ok((l, report.stable_from)),
        _ => Err(ConicError::Input("the scheme is not zero-dimensional".into())),
    }
}

fn count_with(piece: &StablePiece<'_>, rng: &mut ChaCha8Rng) -> Option<usize> {
    let t = piece.ratio(&draw(rng), &draw(rng))?;
    Some(distinct_eigenvalues(&t))
}

/// Number of distinct closed points of the zero-dimensional scheme cut out by `gens`.
pub fn support_count(gens: &[HForm], seed: u64) -> Result<usize, ConicError> {
    let ideal = GradedIdeal::new(gens);
    let (length, degree) = zero_dimensional(&ideal)?;
    if length == 0 {
        return Ok(0);
    }
    let piece = StablePiece::new(&ideal, degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAW_PAIRS {
        let first = count_with(&piece, &mut rng);
        let second = count_with(&piece, &mut rng);
        if let (Some(a), Some(b)) = (first, second) {
            if a == b {
                return Ok(a);
            }
        }
    }
    Err(ConicError::GenericityFailure)
}

fn candidates(rng: &mut ChaCha8Rng) -> impl Iterator<Item = HForm> + '_ {
    let fixed = [[0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 1], [1, 2, 3], [3, -1, 2], [2, 5, -3]];
    fixed.into_iter().map(linear).chain(std::iter::repeat_with(move || draw(rng)).take(4 * MAX_DRAW_PAIRS))
}

/// Support points with coordinates in Q(w) and their multiplicities.
pub fn scheme_points(gens: &[HForm], seed: u64) -> Result<PointSet, ConicError> {
    let support = support_count(gens, seed)?;
    let ideal = GradedIdeal::new(gens);
    let (length, degree) = zero_dimensional(&ideal)?;
    if length == 0 {
        return Ok(PointSet { length, points: Vec::new(), complete: true });
    }
    let piece = StablePiece::new(&ideal, degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let fixed: Vec<HForm> = candidates(&mut rng).collect();
    let den = fixed
        .iter()
        .find(|h| piece.multiplication(h).inverse().is_some())
        .ok_or(ConicError::GenericityFailure)?;
    let separating = fixed
        .iter()
        .filter_map(|g| piece.ratio(g, den))
        .find(|t| distinct_eigenvalues(t) == support)
        .ok_or(ConicError::GenericityFailure)?;
    let coords: Vec<Matrix> =
        (0..3).map(|i| piece.ratio(&HForm::var(i), den).expect("denominator is a unit")).collect();
    let n = piece.len();
    let mut points = Vec::new();
    for r in roots_in_field(&separating.char_poly().expect("square")) {
        let shifted = separating.sub(&Matrix::identity(n).scale(&r));
        let power = (1..n).fold(shifted.clone(), |acc, _| acc.mul(&shifted));
        let space = power.kernel();
        let dim = space.len();
        let b = Matrix::from_cols(&space);
        let mut value = Vec::with_capacity(3);
        for t in &coords {
            let c = restrict(t, &b)?;
            let mu = (0..dim).map(|k| c[(k, k)].clone()).sum::<Scalar>() / Scalar::int(dim as i64);
            let nil = c.sub(&Matrix::identity(dim).scale(&mu));
            if !(1..dim).fold(nil.clone(), |acc, _| acc.mul(&nil)).is_zero() {
                return Err(ConicError::GenericityFailure);
            }
            value.push(mu);
        }
        points.push(SchemePoint { coords: normalize(value), multiplicity: dim });
    }
    points.sort_by(|a, b| a.coords.iter().map(ToString::to_string).cmp(b.coords.iter().map(ToString::to_string)));
    let found: usize = points.iter().map(|p| p.multiplicity).sum();
    Ok(PointSet { length, complete: found == length, points })
}

/// The matrix `C` with `t b = b c`, for `b` spanning a `t`-invariant subspace.
fn restrict(t: &Matrix, b: &Matrix) -> Result<Matrix, ConicError> {
    let image = t.mul(b);
    let cols = (0..b.cols())
        .map(|k| {
            let sol = b.solve_linear(Some(&image.col(k))).map_err(|_| ConicError::GenericityFailure)?;
            Ok(sol.particular.expect("solvable system has a particular solution"))
        })
        .collect::<Result<Vec<_>, ConicError>>()?;
    Ok(Matrix::from_cols(&cols))
}

fn normalize(v: Vec<Scalar>) -> [Scalar; 3] {
    let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("a point has a nonzero coordinate");
    let inv = lead.inv().expect("nonzero");
    std::array::from_fn(|i| &v[i] * &inv)
}
