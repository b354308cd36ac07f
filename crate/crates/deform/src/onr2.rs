//! Pencils `V[l_4, ..., l_r]` of quadrics, the dual algebras of Hilbert function (1,r,2), the
//! linear relations among their generators and the deformation splitting off a simple point.

use std::fmt;

use conet_kernel::{Matrix, Scalar, SparseEchelon, SparseVec};

use crate::affine::AffineIdeal;
use crate::mpoly::{monomials_of_degree, var_name, MPoly};
use crate::report::{Clause, Report};
use crate::DeformError;

/// A generator of the ideal; variable indices count from 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `x_i x_j` with `i < j`.
    Mono(usize, usize),
    /// `X3^2 - X1^2 - X2^2`.
    H,
    /// `x_i^2 - X1^2 - l_i X2^2`.
    Hi(usize),
}

impl Generator {
    fn mono(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "a square is not a generator of W");
        Generator::Mono(i.min(j), i.max(j))
    }

    fn label(&self, r: usize) -> String {
        match self {
            Generator::Mono(i, j) => format!("{}*{}", var_name(r, *i), var_name(r, *j)),
            Generator::H => "h".into(),
            Generator::Hi(i) => format!("h{}", i + 1),
        }
    }
}

/// `coeff * (x_var + shift) * gen`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub var: usize,
    pub shift: Scalar,
    pub gen: Generator,
}

impl Term {
    fn new(coeff: Scalar, var: usize, gen: Generator) -> Self {
        Term { coeff, var, shift: Scalar::zero(), gen }
    }
}

/// One coefficient polynomial per generator of the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy {
    pub coeffs: Vec<MPoly>,
}

impl Syzygy {
    pub fn residual(&self, gens: &[MPoly]) -> MPoly {
        let n = gens.first().map(MPoly::nvars).unwrap_or(0);
        self.coeffs.iter().zip(gens).fold(MPoly::zero(n), |acc, (c, g)| acc.add(&c.mul(g)))
    }

    pub fn is_valid(&self, gens: &[MPoly]) -> bool {
        self.residual(gens).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<Term>,
    /// How the printed relation was changed to make it a syzygy.
    pub correction: Option<String>,
}

/// The pencil `<f, g>` and the generators and relations of its dual ideal.
#[derive(Clone, Debug)]
pub struct OneR2 {
    pub r: usize,
    pub lambdas: Vec<Scalar>,
    pub f: MPoly,
    pub g: MPoly,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

/// `(r^3 - 7r) / 3`.
pub fn expected_syzygy_count(r: usize) -> usize {
    (r * r * r - 7 * r) / 3
}

pub fn build_1r2(r: usize, lambdas: &[Scalar]) -> Result<OneR2, DeformError> {
    if r < 4 || lambdas.len() != r - 3 {
        return Err(DeformError::InvalidParameters(format!("need r >= 4 and r - 3 values, got r = {r} and {}", lambdas.len())));
    }
    if lambdas.iter().any(Scalar::is_zero) {
        return Err(DeformError::InvalidParameters("the lambdas must be nonzero".into()));
    }
    if (0..lambdas.len()).any(|a| (0..a).any(|b| lambdas[a] == lambdas[b])) {
        return Err(DeformError::InvalidParameters("the lambdas must be distinct".into()));
    }
    let sq = |i: usize| MPoly::var(r, i).mul(&MPoly::var(r, i));
    let f = (0..r).filter(|&i| i != 1).fold(MPoly::zero(r), |acc, i| acc.add(&sq(i)));
    let g = sq(1).add(&sq(2)).add(&(3..r).fold(MPoly::zero(r), |acc, i| acc.add(&sq(i).scale(&lambdas[i - 3]))));
    let mut generators: Vec<Generator> = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            generators.push(Generator::Mono(i, j));
        }
    }
    generators.push(Generator::H);
    generators.extend((3..r).map(Generator::Hi));
    let mut out = OneR2 { r, lambdas: lambdas.to_vec(), f, g, generators, relations: Vec::new() };
    out.relations = printed_relations(&out)
        .into_iter()
        .map(|rel| out.validated(rel))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(out)
}

/// The relation list as printed, with 1-based indices as in the usual notation.
fn printed_relations(s: &OneR2) -> Vec<Relation> {
    let r = s.r;
    let one = Scalar::one;
    let x = |i: usize| i - 1;
    let m = |i: usize, j: usize| Generator::mono(i - 1, j - 1);
    let rel = |name: String, terms: Vec<Term>| Relation { name, terms, correction: None };
    let mut out = Vec::new();
    for i in 4..=r {
        let l = s.lambda(i - 1);
        let hi = Generator::Hi(i - 1);
        out.push(rel(
            format!("e_1_{i}"),
            vec![
                Term::new(one(), x(1), hi),
                Term::new(-one(), x(1), Generator::H),
                Term::new(-one(), x(i), m(1, i)),
                Term::new(one(), x(3), m(1, 3)),
                Term::new(one() - &l, x(2), m(1, 2)),
            ],
        ));
        out.push(rel(
            format!("e_2_{i}"),
            vec![
                Term::new(one(), x(2), hi),
                Term::new(-l.clone(), x(2), Generator::H),
                Term::new(-one(), x(i), m(2, i)),
                Term::new(l.clone(), x(3), m(2, 3)),
                Term::new(one() - &l, x(1), m(1, 2)),
            ],
        ));
        out.push(rel(
            format!("e_3_{i}"),
            vec![
                Term::new(one(), x(i), Generator::H),
                Term::new(-one(), x(3), m(3, 1)),
                Term::new(one(), x(1), m(1, i)),
                Term::new(one(), x(2), m(2, i)),
            ],
        ));
        for sv in (3..=r).filter(|&sv| sv != i) {
            out.push(rel(
                format!("e_s{sv}_{i}"),
                vec![
                    Term::new(one(), x(sv), hi),
                    Term::new(one(), x(1), m(1, sv)),
                    Term::new(one(), x(2), m(2, 1)),
                    Term::new(-one(), x(i), m(i, sv)),
                ],
            ));
        }
    }
    for k in 1..=r {
        for i in 1..=r {
            for j in i + 1..=r {
                if k != i && k != j {
                    out.push(rel(
                        format!("e_{k}{i}{j}"),
                        vec![Term::new(one(), x(k), m(i, j)), Term::new(-one(), x(j), m(k, i))],
                    ));
                }
            }
        }
    }
    out
}

impl OneR2 {
    /// `l_i` for the 0-based variable index `i >= 3`.
    fn lambda(&self, i: usize) -> Scalar {
        self.lambdas[i - 3].clone()
    }

    /// The generator as a polynomial in the ideal `I(t)`, where `h_r` becomes `h_r + t X_r`.
    pub fn polynomial(&self, gen: Generator, t: &Scalar) -> MPoly {
        let r = self.r;
        let v = |i| MPoly::var(r, i);
        let sq = |i| v(i).mul(&v(i));
        match gen {
            Generator::Mono(i, j) => v(i).mul(&v(j)),
            Generator::H => sq(2).sub(&sq(0)).sub(&sq(1)),
            Generator::Hi(i) => {
                let base = sq(i).sub(&sq(0)).sub(&sq(1).scale(&self.lambda(i)));
                if i == r - 1 {
                    base.add(&v(i).scale(t))
                } else {
                    base
                }
            }
        }
    }

    pub fn generator_polys(&self, t: &Scalar) -> Vec<MPoly> {
        self.generators.iter().map(|g| self.polynomial(*g, t)).collect()
    }

    /// `W` together with `h, h_4, ..., h_r`.
    pub fn dual_basis(&self) -> Vec<MPoly> {
        self.generator_polys(&Scalar::zero())
    }

    /// The ideal `I(t) = (W, h, h_4, ..., h_{r-1}, h_r + t X_r)`.
    pub fn ideal(&self, t: &Scalar) -> AffineIdeal {
        AffineIdeal::new(self.r, self.generator_polys(t)).expect("generators are nonzero")
    }

    fn index(&self, gen: Generator) -> usize {
        self.generators.iter().position(|g| *g == gen).expect("known generator")
    }

    pub fn syzygy(&self, rel: &Relation) -> Syzygy {
        let mut coeffs = vec![MPoly::zero(self.r); self.generators.len()];
        for term in &rel.terms {
            let m = MPoly::var(self.r, term.var).add(&MPoly::constant(self.r, term.shift.clone())).scale(&term.coeff);
            let k = self.index(term.gen);
            coeffs[k] = coeffs[k].add(&m);
        }
        Syzygy { coeffs }
    }

    fn term_poly(&self, var: usize, gen: Generator) -> MPoly {
        MPoly::var(self.r, var).mul(&self.polynomial(gen, &Scalar::zero()))
    }

    /// Coefficients `c_1, ...` with `term_0 + sum c_k term_k = 0`, the first coefficient kept.
    fn solve(&self, terms: &[Term]) -> Option<Vec<Scalar>> {
        let first = self.term_poly(terms[0].var, terms[0].gen).scale(&terms[0].coeff);
        let rest: Vec<MPoly> = terms[1..].iter().map(|t| self.term_poly(t.var, t.gen)).collect();
        let monos: Vec<Vec<u32>> = monomials_of_degree(self.r, 3);
        let a = Matrix::from_rows(monos.iter().map(|e| rest.iter().map(|p| p.coeff(e)).collect()).collect());
        let b: Vec<Scalar> = monos.iter().map(|e| -first.coeff(e)).collect();
        let sol = a.solve_linear(Some(&b)).ok()?;
        let mut out = vec![terms[0].coeff.clone()];
        out.extend(sol.particular?);
        Some(out)
    }

    fn term_text(&self, t: &Term) -> String {
        format!("({})*{}*({})", t.coeff, var_name(self.r, t.var), t.gen.label(self.r))
    }

    fn changes(&self, old: &[Term], new: &[Term]) -> String {
        let parts: Vec<String> = old
            .iter()
            .zip(new)
            .filter(|(a, b)| a != b)
            .map(|(a, b)| format!("{} -> {}", self.term_text(a), self.term_text(b)))
            .collect();
        parts.join("; ")
    }

    /// Keeps a printed relation that is a syzygy; otherwise solves for its scalar coefficients
    /// on the same support, then with one generator replaced.
    fn validated(&self, rel: Relation) -> Result<Relation, DeformError> {
        let gens = self.dual_basis();
        if self.syzygy(&rel).is_valid(&gens) {
            return Ok(rel);
        }
        let with = |terms: &[Term], coeffs: Vec<Scalar>| -> Vec<Term> {
            terms.iter().zip(coeffs).map(|(t, c)| Term { coeff: c, ..t.clone() }).collect()
        };
        if let Some(c) = self.solve(&rel.terms) {
            let terms = with(&rel.terms, c);
            let correction = Some(self.changes(&rel.terms, &terms));
            return Ok(Relation { terms, correction, ..rel });
        }
        for k in 1..rel.terms.len() {
            for gen in &self.generators {
                if *gen == rel.terms[k].gen {
                    continue;
                }
                let mut trial = rel.terms.clone();
                trial[k].gen = *gen;
                if let Some(c) = self.solve(&trial) {
                    let terms = with(&trial, c);
                    let correction = Some(self.changes(&rel.terms, &terms));
                    return Ok(Relation { terms, correction, ..rel });
                }
            }
        }
        Err(DeformError::VerificationFailure(format!("no valid correction of {}", rel.name)))
    }

    /// Dimension of the linear syzygies: the kernel of `(a_k) -> sum a_k g_k` from `R_1^n` to `R_3`.
    pub fn linear_syzygy_dimension(&self) -> usize {
        let monos = monomials_of_degree(self.r, 3);
        let mut span = SparseEchelon::new(monos.len());
        let gens = self.dual_basis();
        for g in &gens {
            for v in 0..self.r {
                let p = MPoly::var(self.r, v).mul(g);
                let row: SparseVec =
                    monos.iter().enumerate().map(|(i, e)| (i, p.coeff(e))).filter(|(_, c)| !c.is_zero()).collect();
                span.insert(row);
            }
        }
        gens.len() * self.r - span.rank()
    }

    /// Rank of the listed relations as vectors of linear coefficients.
    pub fn relation_rank(&self) -> usize {
        let mut span = SparseEchelon::new(self.generators.len() * self.r);
        for rel in &self.relations {
            let mut row = SparseVec::new();
            for t in &rel.terms {
                let e = row.entry(self.index(t.gen) * self.r + t.var).or_default();
                *e += &t.coeff;
            }
            row.retain(|_, c| !c.is_zero());
            span.insert(row);
        }
        span.rank()
    }

    /// The relation extended to `I(t)`: the coefficient `-X_r` of `X_s X_r` becomes `-(X_r + t)`
    /// in every relation involving `h_r`.
    pub fn extended(&self, rel: &Relation, t: &Scalar) -> Relation {
        let last = self.r - 1;
        let mut out = rel.clone();
        if rel.terms.iter().any(|term| term.gen == Generator::Hi(last)) {
            for term in out.terms.iter_mut() {
                if term.var == last && matches!(term.gen, Generator::Mono(_, j) if j == last) && term.coeff == -Scalar::one() {
                    term.shift = t.clone();
                }
            }
        }
        out
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} terms", self.name, self.terms.len())
    }
}

/// The apolarity pairing of two quadrics: coefficients weighted by `prod e_i!`.
fn pairing(p: &MPoly, q: &MPoly) -> Scalar {
    p.terms()
        .map(|(e, c)| {
            let w: i64 = e.iter().map(|&k| if k == 2 { 2 } else { 1 }).product();
            c * &q.coeff(e) * Scalar::int(w)
        })
        .sum()
}

fn hilbert_text(hf: &[usize]) -> String {
    let parts: Vec<String> = hf.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn verify_deformation_1r2(r: usize, lambdas: &[Scalar], t: &Scalar, seed: u64) -> Result<Report, DeformError> {
    if t.is_zero() {
        return Err(DeformError::InvalidParameters("t must be nonzero".into()));
    }
    let s = build_1r2(r, lambdas)?;
    let mut report = Report::default();

    let dual = s.dual_basis();
    let rank = {
        let mut e = SparseEchelon::new(monomials_of_degree(r, 2).len());
        let monos = monomials_of_degree(r, 2);
        for p in &dual {
            e.insert(monos.iter().enumerate().map(|(i, m)| (i, p.coeff(m))).filter(|(_, c)| !c.is_zero()).collect());
        }
        e.rank()
    };
    let orthogonal = dual.iter().all(|p| pairing(p, &s.f).is_zero() && pairing(p, &s.g).is_zero());
    let expected = r * (r + 1) / 2 - 2;
    report.push(Clause::new(
        "dual_space",
        orthogonal && rank == expected,
        format!("{} generators of rank {rank}, orthogonal to f and g: {orthogonal}", dual.len()),
    ));

    let corrected: Vec<String> = s
        .relations
        .iter()
        .filter_map(|rel| rel.correction.as_ref().map(|c| format!("{}: {c}", rel.name)))
        .collect();
    let valid = s.relations.iter().all(|rel| s.syzygy(rel).is_valid(&dual));
    let detail = if corrected.is_empty() {
        format!("{} relations, all exact as listed", s.relations.len())
    } else {
        format!("{} relations, corrected {}", s.relations.len(), corrected.join(" | "))
    };
    report.push(Clause::new("relations", valid, detail));

    let dim = s.linear_syzygy_dimension();
    let span = s.relation_rank();
    let want = expected_syzygy_count(r);
    report.push(Clause::new(
        "syzygy_count",
        dim == want && span == want,
        format!("linear syzygies {dim}, spanned by the relations {span}, formula {want}"),
    ));

    let deformed = s.generator_polys(t);
    let extended: Vec<Relation> = s.relations.iter().map(|rel| s.extended(rel, t)).collect();
    let modified = extended.iter().zip(&s.relations).filter(|(a, b)| a != b).count();
    let extend_ok = extended.iter().all(|rel| s.syzygy(rel).is_valid(&deformed));
    report.push(Clause::new("relations_extend", extend_ok, format!("{modified} relations modified, all syzygies of I(t): {extend_ok}")));

    let special = s.ideal(&Scalar::zero());
    let hf = special.graded_hilbert(3)?;
    let mut want_hf = vec![1, r, 2, 0];
    want_hf.truncate(hf.len());
    report.push(Clause::new("graded_hf_t0", hf == want_hf, format!("hilbert function {}", hilbert_text(&hf))));

    let ideal = s.ideal(t);
    let l0 = special.length()?;
    let lt = ideal.length()?;
    report.push(Clause::new(
        "length_conserved",
        l0 == r + 3 && lt == r + 3,
        format!("length {l0} at t = 0 and {lt} at t = {t}"),
    ));

    let local = ideal.quotient()?.local_lengths(seed)?;
    let mut split_point = vec![Scalar::zero(); r];
    split_point[r - 1] = -t.clone();
    let origin = vec![Scalar::zero(); r];
    let split = local.len() == 2 && local[0] == (origin, r + 2) && local[1] == (split_point, 1);
    let found: Vec<String> = local
        .iter()
        .map(|(p, m)| {
            let c: Vec<String> = p.iter().map(ToString::to_string).collect();
            format!("({}):{m}", c.join(", "))
        })
        .collect();
    report.push(Clause::new("support_count", local.len() == 2, format!("{} points", local.len())));
    report.push(Clause::new("split", split, found.join(" ")));
    Ok(report)
}
