//! Univariate polynomials over Q(w).

use std::fmt;
use std::ops::{Add, Sub};

use crate::{KernelError, Scalar};

/// Coefficients stored low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Scalar>,
}

impl UPoly {
    pub fn new(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(Scalar::is_zero) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Scalar::int(x)).collect())
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn x() -> Self {
        UPoly { c: vec![Scalar::zero(), Scalar::one()] }
    }

    pub fn constant(a: Scalar) -> Self {
        Self::new(vec![a])
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(roots: &[Scalar]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| acc.mul(&UPoly::new(vec![-r, Scalar::one()])))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.c.get(k).cloned().unwrap_or_default()
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        Self::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut r = vec![Scalar::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] += a * b;
                }
            }
        }
        Self::new(r)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.c.iter().rev().fold(Scalar::zero(), |acc, a| acc * x + a)
    }

    pub fn derivative(&self) -> UPoly {
        Self::new(self.c.iter().enumerate().skip(1).map(|(k, a)| a * Scalar::int(k as i64)).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().inv().expect("nonzero lead");
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                let t = &f * b;
                r[k + j] -= &t;
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.monic(), o.monic());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }

    /// Yun's square-free decomposition: monic factors with their multiplicities.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let a = self.monic();
        let b = a.derivative();
        let c = a.gcd(&b);
        let mut w = a.div_rem(&c).0;
        let mut y = b.div_rem(&c).0;
        let mut z = &y - &w.derivative();
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let g = w.gcd(&z);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            w = w.div_rem(&g).0;
            y = z.div_rem(&g).0;
            z = &y - &w.derivative();
            i += 1;
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> UPoly {
        self.squarefree_decomposition().iter().fold(UPoly::one(), |acc, (f, _)| acc.mul(f))
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_root_count(&self) -> usize {
        self.squarefree_decomposition().iter().map(|(f, _)| f.degree().unwrap_or(0)).sum()
    }

    /// Coefficientwise conjugation w -> w^2.
    pub fn conj(&self) -> UPoly {
        Self::new(self.c.iter().map(Scalar::conj).collect())
    }
}

/// Multiplicities of the roots of a binary form `sum c_k s^k t^(n-k)` over the closure,
/// sorted in decreasing order. The form is given by its degree and dehomogenization in `s`.
pub fn binary_pattern(n: usize, f: &UPoly) -> Result<Vec<usize>, KernelError> {
    let d = f.degree().ok_or(KernelError::ZeroForm)?;
    assert!(d <= n, "dehomogenization exceeds the stated degree");
    let mut pattern: Vec<usize> = f
        .squarefree_decomposition()
        .iter()
        .flat_map(|(g, m)| std::iter::repeat_n(*m, g.degree().unwrap_or(0)))
        .collect();
    if n > d {
        pattern.push(n - d);
    }
    pattern.sort_unstable_by(|a, b| b.cmp(a));
    Ok(pattern)
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| match k {
                0 => format!("({a})"),
                1 => format!("({a})*x"),
                _ => format!("({a})*x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let a = UPoly::from_i64(&[3, 0, -2, 5, 1]);
        let b = UPoly::from_i64(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&q.mul(&b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let f = UPoly::from_roots(&[Scalar::int(1), Scalar::int(2)]);
        let g = UPoly::from_roots(&[Scalar::int(2), Scalar::int(3)]).scale(&Scalar::int(7));
        assert_eq!(f.gcd(&g), UPoly::from_roots(&[Scalar::int(2)]));
    }

    #[test]
    fn yun_multiplicities() {
        let w = Scalar::omega();
        let f = UPoly::from_roots(&[Scalar::int(1), w.clone(), w.clone(), Scalar::int(4), Scalar::int(4), Scalar::int(4)]);
        let dec = f.squarefree_decomposition();
        let mults: Vec<(usize, usize)> = dec.iter().map(|(g, m)| (g.degree().unwrap(), *m)).collect();
        assert_eq!(mults, vec![(1, 1), (1, 2), (1, 3)]);
        assert_eq!(f.distinct_root_count(), 3);
    }

    #[test]
    fn binary_patterns() {
        // s^2 t, as a binary cubic: f(s,1) = s^2, one root at infinity.
        assert_eq!(binary_pattern(3, &UPoly::from_i64(&[0, 0, 1])).unwrap(), vec![2, 1]);
        // s t (s + t)
        assert_eq!(binary_pattern(3, &UPoly::from_i64(&[0, 1, 1])).unwrap(), vec![1, 1, 1]);
        assert_eq!(binary_pattern(3, &UPoly::from_i64(&[1])).unwrap(), vec![3]);
        assert_eq!(binary_pattern(2, &UPoly::zero()), Err(KernelError::ZeroForm));
    }
}
