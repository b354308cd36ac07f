//! Homogeneous forms in three variables.

use std::collections::BTreeMap;
use std::fmt;

use conet_kernel::{Matrix, Scalar};

use crate::PolyError;

pub type Exp = [u32; 3];

/// Display names of the three variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Vars {
    #[default]
    Xyz,
    Abc,
}

impl Vars {
    pub fn names(self) -> [&'static str; 3] {
        match self {
            Vars::Xyz => ["X", "Y", "Z"],
            Vars::Abc => ["A", "B", "C"],
        }
    }
}

/// A homogeneous form; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HForm {
    degree: u32,
    vars: Vars,
    terms: BTreeMap<Exp, Scalar>,
}

/// Exponent triples of degree `d` in lexicographically decreasing order (`X^d` first).
pub fn monomials(d: u32) -> Vec<Exp> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// Number of monomials of degree `d` in three variables.
pub fn monomial_count(d: u32) -> usize {
    ((d + 1) * (d + 2) / 2) as usize
}

/// Position of an exponent in [`monomials`].
pub fn monomial_index(e: Exp) -> usize {
    let d = e[0] + e[1] + e[2];
    let before: u32 = (e[0] + 1..=d).map(|i| d - i + 1).sum();
    (before + (d - e[0] - e[1])) as usize
}

impl HForm {
    pub fn zero(degree: u32) -> Self {
        HForm { degree, vars: Vars::Xyz, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_terms(0, [([0, 0, 0], c)]).expect("degree zero")
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(e, Scalar::one())
    }

    pub fn monomial(e: Exp, c: Scalar) -> Self {
        Self::from_terms(e.iter().sum(), [(e, c)]).expect("consistent degree")
    }

    /// Builds a form, summing repeated exponents; every exponent must have total `degree`.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exp, Scalar)>) -> Result<Self, PolyError> {
        let mut map: BTreeMap<Exp, Scalar> = BTreeMap::new();
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(PolyError::NotHomogeneous);
            }
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HForm { degree, vars: Vars::Xyz, terms: map })
    }

    /// Coefficient vector in the order of [`monomials`].
    pub fn from_vector(degree: u32, v: &[Scalar]) -> Self {
        assert_eq!(v.len(), monomial_count(degree), "vector length");
        Self::from_terms(degree, monomials(degree).into_iter().zip(v.iter().cloned())).expect("consistent degree")
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        monomials(self.degree).iter().map(|e| self.coeff(*e)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn with_vars(mut self, vars: Vars) -> Self {
        self.vars = vars;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exp) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in lexicographically decreasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading coefficient in the lexicographic order, zero for the zero form.
    pub fn lead(&self) -> Scalar {
        self.terms().next().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.values().all(Scalar::is_rational)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return HForm { terms: BTreeMap::new(), ..self.clone() };
        }
        HForm { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(), ..self.clone() }
    }

    /// Scaled so that the leading coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.lead().inv() {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    /// Whether `self = c * other` for some nonzero scalar `c`.
    pub fn proportional(&self, other: &HForm) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.degree == other.degree && self.normalized().terms == other.normalized().terms
    }

    pub fn add(&self, o: &HForm) -> HForm {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return HForm { vars: self.vars, ..o.clone() };
        }
        assert_eq!(self.degree, o.degree, "adding forms of different degree");
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let t = terms.entry(*e).or_default();
            *t += c;
            if t.is_zero() {
                terms.remove(e);
            }
        }
        HForm { terms, ..self.clone() }
    }

    pub fn sub(&self, o: &HForm) -> HForm {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> HForm {
        self.scale(&-Scalar::one())
    }

    pub fn mul(&self, o: &HForm) -> HForm {
        let mut terms: BTreeMap<Exp, Scalar> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                *terms.entry([a[0] + b[0], a[1] + b[1], a[2] + b[2]]).or_default() += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HForm { degree: self.degree + o.degree, vars: self.vars, terms }
    }

    pub fn pow(&self, e: u32) -> HForm {
        (0..e).fold(HForm::constant(Scalar::one()).with_vars(self.vars), |acc, _| acc.mul(self))
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> HForm {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                terms.insert(f, c * Scalar::int(e[i] as i64));
            }
        }
        HForm { degree: self.degree.saturating_sub(1), vars: self.vars, terms }
    }

    pub fn gradient(&self) -> [HForm; 3] {
        [self.derivative(0), self.derivative(1), self.derivative(2)]
    }

    pub fn evaluate(&self, p: &[Scalar; 3]) -> Scalar {
        let pw: Vec<Vec<Scalar>> = p
            .iter()
            .map(|x| {
                let mut v = vec![Scalar::one()];
                for k in 1..=self.degree as usize {
                    let next = &v[k - 1] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| c * &pw[0][e[0] as usize] * &pw[1][e[1] as usize] * &pw[2][e[2] as usize])
            .sum()
    }

    /// `F(g x)`: variable `i` is replaced by `sum_j g[i][j] x_j`.
    pub fn substitute(&self, g: &Matrix) -> Result<HForm, PolyError> {
        if g.rows() != 3 || g.cols() != 3 {
            return Err(PolyError::DegreeMismatch);
        }
        if g.det().map_err(PolyError::Kernel)?.is_zero() {
            return Err(PolyError::SingularSubstitution);
        }
        Ok(self.substitute_any(g))
    }

    /// Substitution without the invertibility check.
    pub fn substitute_any(&self, g: &Matrix) -> HForm {
        let lin: Vec<HForm> = (0..3)
            .map(|i| {
                HForm::from_terms(1, (0..3).map(|j| {
                    let mut e = [0; 3];
                    e[j] = 1;
                    (e, g[(i, j)].clone())
                }))
                .expect("degree one")
            })
            .collect();
        let powers: Vec<Vec<HForm>> = lin
            .iter()
            .map(|l| {
                let mut v = vec![HForm::constant(Scalar::one())];
                for k in 1..=self.degree as usize {
                    let next = v[k - 1].mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = HForm::zero(self.degree);
        for (e, c) in &self.terms {
            let t = powers[0][e[0] as usize].mul(&powers[1][e[1] as usize]).mul(&powers[2][e[2] as usize]).scale(c);
            acc = acc.add(&t);
        }
        HForm { degree: self.degree, vars: self.vars, terms: acc.terms }
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: [usize; 3]) -> HForm {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = [0; 3];
                for i in 0..3 {
                    f[perm[i]] = e[i];
                }
                (f, c.clone())
            })
            .collect();
        HForm { terms, ..self.clone() }
    }

    /// Symmetric 3x3 matrix of a conic, off-diagonal entries halved.
    pub fn conic_matrix(&self) -> Matrix {
        assert_eq!(self.degree, 2, "conic matrix of a non-quadric");
        let half = Scalar::frac(1, 2);
        let mut m = Matrix::zeros(3, 3);
        for (e, c) in &self.terms {
            let idx: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat_n(i, e[i] as usize)).collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                m[(i, i)] = c.clone();
            } else {
                m[(i, j)] = c * &half;
                m[(j, i)] = c * &half;
            }
        }
        m
    }

    /// Inverse of [`HForm::conic_matrix`].
    pub fn from_conic_matrix(m: &Matrix) -> HForm {
        let mut terms = Vec::new();
        for i in 0..3 {
            for j in i..3 {
                let mut e = [0; 3];
                e[i] += 1;
                e[j] += 1;
                let c = if i == j { m[(i, i)].clone() } else { &m[(i, j)] + &m[(j, i)] };
                terms.push((e, c));
            }
        }
        HForm::from_terms(2, terms).expect("degree two")
    }
}

impl fmt::Display for HForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| format!("({c})*{}^{}*{}^{}*{}^{}", names[0], e[0], names[1], e[1], names[2], e[2]))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
