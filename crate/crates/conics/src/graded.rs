//! Graded pieces of ideals generated by forms, Hilbert functions and their stabilization.

use std::cell::RefCell;
use std::fmt;

use conet_kernel::SparseEchelon;
use conet_poly::{monomial_count, monomials, HForm};

use crate::system::form_vec;
use crate::ConicError;

pub const DEFAULT_PROBE: usize = 8;
pub const RAISED_PROBE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dimension {
    Zero,
    One,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeReport {
    pub hf_prefix: Vec<usize>,
    pub dimension: Dimension,
    pub length: Length,
    pub support_count: Option<usize>,
    /// First degree from which the Hilbert function follows Macaulay's maximal growth.
    pub stable_from: usize,
}

/// Homogeneous ideal with lazily computed graded pieces.
pub struct GradedIdeal {
    gens: Vec<HForm>,
    pieces: RefCell<Vec<SparseEchelon>>,
}

impl GradedIdeal {
    pub fn new(gens: &[HForm]) -> Self {
        GradedIdeal { gens: gens.iter().filter(|g| !g.is_zero()).cloned().collect(), pieces: RefCell::new(Vec::new()) }
    }

    pub fn generators(&self) -> &[HForm] {
        &self.gens
    }

    pub fn max_generator_degree(&self) -> usize {
        self.gens.iter().map(|g| g.degree() as usize).max().unwrap_or(0)
    }

    fn build(&self, d: usize) -> SparseEchelon {
        let mut e = SparseEchelon::new(monomial_count(d as u32));
        if d > 0 {
            let pieces = self.pieces.borrow();
            let prev = &pieces[d - 1];
            if prev.rank() > 0 {
                let prev_monos = monomials(d as u32 - 1);
                let rows = prev_rows(prev, &prev_monos);
                for r in rows {
                    for v in 0..3 {
                        let shifted = r.mul(&HForm::var(v));
                        e.insert(form_vec(&shifted));
                    }
                }
            }
        }
        for g in self.gens.iter().filter(|g| g.degree() as usize == d) {
            e.insert(form_vec(g));
        }
        e
    }

    /// The degree-`d` piece as an echelon over the monomials of degree `d`.
    pub fn piece(&self, d: usize) -> std::cell::Ref<'_, SparseEchelon> {
        while self.pieces.borrow().len() <= d {
            let next = self.pieces.borrow().len();
            let p = self.build(next);
            self.pieces.borrow_mut().push(p);
        }
        std::cell::Ref::map(self.pieces.borrow(), |p| &p[d])
    }

    pub fn hilbert(&self, d: usize) -> usize {
        monomial_count(d as u32) - self.piece(d).rank()
    }

    pub fn hilbert_prefix(&self, upto: usize) -> Vec<usize> {
        (0..=upto).map(|d| self.hilbert(d)).collect()
    }
}

fn prev_rows(e: &SparseEchelon, monos: &[[u32; 3]]) -> Vec<HForm> {
    let d = monos[0].iter().sum();
    e.basis()
        .map(|row| HForm::from_terms(d, row.iter().map(|(c, x)| (monos[*c], x.clone()))).expect("homogeneous"))
        .collect()
}

/// Macaulay's upper bound `a^<d>` for the growth of a Hilbert function from degree `d`.
pub fn macaulay_upper(a: usize, d: usize) -> usize {
    if d == 0 {
        return if a == 0 { 0 } else { usize::MAX };
    }
    let mut rest = a;
    let mut out = 0usize;
    let mut i = d;
    while rest > 0 && i > 0 {
        let mut k = i;
        while binom(k + 1, i) <= rest {
            k += 1;
        }
        rest -= binom(k, i);
        out += binom(k + 1, i + 1);
        i -= 1;
    }
    out
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Hilbert function report, certified by Gotzmann persistence within `probe_degree`.
pub fn graded_quotient_report(gens: &[HForm], probe_degree: usize) -> Result<SchemeReport, ConicError> {
    let ideal = GradedIdeal::new(gens);
    report_for(&ideal, probe_degree)
}

/// As [`graded_quotient_report`] with the default probe, raised once on failure.
pub fn graded_report_auto(gens: &[HForm]) -> Result<SchemeReport, ConicError> {
    let ideal = GradedIdeal::new(gens);
    report_for(&ideal, DEFAULT_PROBE).or_else(|_| report_for(&ideal, RAISED_PROBE))
}

pub(crate) fn report_for(ideal: &GradedIdeal, probe_degree: usize) -> Result<SchemeReport, ConicError> {
    let hf = ideal.hilbert_prefix(probe_degree);
    let start = ideal.max_generator_degree().max(1);
    let certified = (start..probe_degree).find(|&d| hf[d + 1] == macaulay_upper(hf[d], d));
    let Some(d0) = certified else {
        return Err(ConicError::Indeterminate(probe_degree));
    };
    let mut tail = vec![hf[d0]];
    for k in 0..4 {
        let next = macaulay_upper(tail[k], d0 + k);
        tail.push(next);
    }
    let (dimension, length) = if tail.windows(2).all(|w| w[0] == w[1]) {
        (Dimension::Zero, Length::Finite(hf[d0]))
    } else {
        let diffs: Vec<isize> = tail.windows(2).map(|w| w[1] as isize - w[0] as isize).collect();
        if diffs.iter().all(|&x| x == diffs[0] && x > 0) {
            (Dimension::One, Length::Infinite)
        } else {
            return Err(ConicError::Indeterminate(probe_degree));
        }
    };
    Ok(SchemeReport { hf_prefix: hf, dimension, length, support_count: None, stable_from: d0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use conet_poly::f;

    #[test]
    fn macaulay_bounds() {
        assert_eq!(macaulay_upper(3, 2), 4);
        assert_eq!(macaulay_upper(1, 3), 1);
        assert_eq!(macaulay_upper(0, 4), 0);
        assert_eq!(macaulay_upper(3, 5), 3);
        assert_eq!(macaulay_upper(6, 2), 10);
    }

    #[test]
    fn pieces_agree_with_direct_count() {
        let gens = [f("X^2"), f("Y^2"), f("Z^2")];
        let hf = GradedIdeal::new(&gens).hilbert_prefix(5);
        assert_eq!(hf, vec![1, 3, 3, 1, 0, 0]);
    }
}
