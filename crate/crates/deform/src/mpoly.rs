//! Polynomials in a fixed number of variables, not necessarily homogeneous.

use std::collections::BTreeMap;
use std::fmt;

use conet_kernel::Scalar;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Scalar>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(e: Exponent, c: Scalar) -> Self {
        let mut p = Self::zero(e.len());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable `x_i`, counting from 0.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Scalar::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Scalar)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: Scalar) {
        let slot = self.terms.entry(e).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.retain(|_, x| !x.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            Some(d) => degs.all(|k| k == d),
            None => true,
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut p = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                p.add_term(e, x * y);
            }
        }
        p
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(point).fold(c.clone(), |acc, (k, x)| acc * x.pow(*k)))
            .sum()
    }

    pub fn derivative(&self, i: usize) -> MPoly {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c * Scalar::int(e[i] as i64));
            }
        }
        p
    }

    /// The same polynomial with `x_i` replaced by `value`.
    pub fn specialize(&self, i: usize, value: &Scalar) -> MPoly {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[i] = 0;
            p.add_term(f, c * value.pow(e[i]));
        }
        p
    }
}

/// Names `X, Y, Z` for three variables and `X1, ..., Xr` otherwise.
pub fn var_name(nvars: usize, i: usize) -> String {
    if nvars <= 3 {
        ["X", "Y", "Z"][i].to_string()
    } else {
        format!("X{}", i + 1)
    }
}

fn monomial_text(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, k)| **k > 0)
        .map(|(i, k)| if *k == 1 { var_name(e.len(), i) } else { format!("{}^{k}", var_name(e.len(), i)) })
        .collect();
    parts.join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let parts: Vec<String> = ordered
            .into_iter()
            .map(|(e, c)| {
                let m = monomial_text(e);
                match (m.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => m,
                    (false, false) => format!("({c})*{m}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Monomials of degree exactly `d` in `n` variables, lexicographically descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for k in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = MPoly::var(3, 0);
        let y = MPoly::var(3, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p, x.mul(&x).sub(&y.mul(&y)));
        assert_eq!(p.degree(), Some(2));
        assert!(p.is_homogeneous());
        assert!(!p.add(&x).is_homogeneous());
        assert_eq!(p.evaluate(&[3, 1, 7].map(Scalar::int)), Scalar::int(8));
        assert_eq!(p.derivative(1), y.scale(&Scalar::int(-2)));
        assert_eq!(p.to_string(), "X^2 + (-1)*Y^2");
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(5, 3).len(), 35);
        assert_eq!(monomials_of_degree(3, 2)[0], vec![2, 0, 0]);
    }
}
