//! The Aronhold invariants S and T of a ternary cubic, expanded from their bracket expressions.
//!
//! With the cubic written symbolically as `a_x^3 = b_x^3 = ...`,
//! `S = (abc)(abd)(acd)(bcd)` and `T = (abc)(abd)(ace)(bcf)(def)^2`.

use std::collections::HashMap;
use std::sync::OnceLock;

use conet_kernel::Scalar;
use conet_poly::{monomial_index, monomials, HForm};

/// A polynomial in the ten coefficients of a cubic, in the order of [`monomials`]`(3)`.
pub struct CoefficientPolynomial {
    terms: Vec<(Vec<usize>, Scalar)>,
}

impl CoefficientPolynomial {
    pub fn evaluate(&self, f: &HForm) -> Scalar {
        let c: Vec<Scalar> = monomials(3).iter().map(|e| f.coeff(*e)).collect();
        self.terms
            .iter()
            .map(|(m, k)| m.iter().fold(k.clone(), |acc, &i| acc * &c[i]))
            .sum()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

const PERMS: [([usize; 3], i64); 6] =
    [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)];

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// Expands a product of brackets in which every letter occurs exactly three times.
fn expand(brackets: &[[usize; 3]], letters: usize) -> CoefficientPolynomial {
    let mut acc: HashMap<Vec<usize>, i64> = HashMap::new();
    let total = 6usize.pow(brackets.len() as u32);
    let mut slots = vec![Vec::with_capacity(3); letters];
    for code in 0..total {
        for s in slots.iter_mut() {
            s.clear();
        }
        let mut sign = 1i64;
        let mut rest = code;
        for br in brackets {
            let (perm, s) = PERMS[rest % 6];
            rest /= 6;
            sign *= s;
            for (pos, letter) in br.iter().enumerate() {
                slots[*letter].push(perm[pos]);
            }
        }
        let mut weight = sign;
        let mut mono = Vec::with_capacity(letters);
        for s in &slots {
            let mut e = [0u32; 3];
            for &i in s {
                e[i] += 1;
            }
            weight *= e.iter().map(|&k| factorial(k)).product::<i64>();
            mono.push(monomial_index(e));
        }
        mono.sort_unstable();
        *acc.entry(mono).or_default() += weight;
    }
    let scale = Scalar::int(6).pow(letters as u32);
    let mut terms: Vec<(Vec<usize>, Scalar)> =
        acc.into_iter().filter(|(_, k)| *k != 0).map(|(m, k)| (m, Scalar::int(k) / &scale)).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    CoefficientPolynomial { terms }
}

/// The degree-4 invariant.
pub fn s_invariant() -> &'static CoefficientPolynomial {
    static S: OnceLock<CoefficientPolynomial> = OnceLock::new();
    S.get_or_init(|| expand(&[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], 4))
}

/// The degree-6 invariant.
pub fn t_invariant() -> &'static CoefficientPolynomial {
    static T: OnceLock<CoefficientPolynomial> = OnceLock::new();
    T.get_or_init(|| expand(&[[0, 1, 2], [0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5], [3, 4, 5]], 6))
}

/// The ratio `T^2 / S^3` on singular cubics, calibrated on the triangle `X^3+Y^3+Z^3-3XYZ`.
pub fn discriminant_constant() -> &'static Scalar {
    static C: OnceLock<Scalar> = OnceLock::new();
    C.get_or_init(|| {
        let tri = conet_poly::f("X^3+Y^3+Z^3-3*X*Y*Z");
        let s = s_invariant().evaluate(&tri);
        let t = t_invariant().evaluate(&tri);
        &t * &t / s.pow(3)
    })
}

/// The projective pair `(S^3 : T^2)` with its first nonzero entry equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantKey(pub [Scalar; 2]);

impl InvariantKey {
    pub fn new(s3: Scalar, t2: Scalar) -> Option<Self> {
        let lead = if s3.is_zero() { t2.clone() } else { s3.clone() };
        let inv = lead.inv()?;
        Some(InvariantKey([s3 * &inv, t2 * &inv]))
    }
}

impl std::fmt::Display for InvariantKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} : {})", self.0[0], self.0[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aronhold {
    pub s: Scalar,
    pub t: Scalar,
    /// `None` when S and T both vanish.
    pub key: Option<InvariantKey>,
    pub disc_zero: bool,
}

pub fn aronhold(f: &HForm) -> Aronhold {
    let s = s_invariant().evaluate(f);
    let t = t_invariant().evaluate(f);
    let s3 = s.pow(3);
    let t2 = t.pow(2);
    let disc_zero = (&t2 - discriminant_constant() * &s3).is_zero();
    let key = InvariantKey::new(s3, t2);
    Aronhold { s, t, key, disc_zero }
}
