//! Roots in Q(w) of univariate polynomials.
//!
//! Candidates come from the rational-root theorem applied to the norm polynomial
//! `p * conj(p)`, and from its integer quadratic factors with discriminant `-3 k^2`.
//! Integers are factored by trial division up to [`TRIAL_LIMIT`]; a cofactor left over
//! is treated as prime, so roots with enormous height may be missed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Scalar, UPoly};

pub const TRIAL_LIMIT: u64 = 100_000;
const WORK_LIMIT: u64 = 4_000_000;

fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut ds = vec![BigInt::one()];
    for (p, e) in factor(n) {
        let mut next = Vec::with_capacity(ds.len() * (e as usize + 1));
        for d in &ds {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        ds = next;
    }
    ds.sort();
    ds
}

/// Primitive integer polynomial proportional to a polynomial with rational coefficients.
fn primitive_integer(p: &UPoly) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re().denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c.re() * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

/// `sum a_k u^k v^(n-k)`, zero iff `u/v` is a root.
fn eval_homog(a: &[BigInt], u: &BigInt, v: &BigInt) -> BigInt {
    let n = a.len() - 1;
    a.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| c * u.pow(k as u32) * v.pow((n - k) as u32))
        .sum()
}

fn divide_linear(a: &[BigInt], u: &BigInt, v: &BigInt) -> Option<Vec<BigInt>> {
    // Divide by (v x - u), coefficients low first.
    let n = a.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut rem = a.to_vec();
    for k in (0..n).rev() {
        let (qk, r) = rem[k + 1].div_rem(v);
        if !r.is_zero() {
            return None;
        }
        rem[k] += &qk * u;
        rem[k + 1] = BigInt::zero();
        q[k] = qk;
    }
    rem[0].is_zero().then_some(q)
}

/// Distinct roots of `p` lying in Q(w), sorted.
pub fn roots_in_field(p: &UPoly) -> Vec<Scalar> {
    let q = p.squarefree_part();
    let Some(deg) = q.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let mut found: Vec<Scalar> = Vec::new();
    let norm = q.mul(&q.conj());
    debug_assert!(norm.coeffs().iter().all(Scalar::is_rational));
    let mut a = primitive_integer(&norm);
    if a[0].is_zero() {
        found.push(Scalar::zero());
        while a.len() > 1 && a[0].is_zero() {
            a.remove(0);
        }
    }
    let mut work: u64 = 0;
    if a.len() > 1 {
        let lead_divs = divisors(a.last().expect("nonempty"));
        let const_divs = divisors(&a[0]);
        'outer: for v in &lead_divs {
            for u in &const_divs {
                for u in [u.clone(), -u] {
                    work += 1;
                    if work > WORK_LIMIT {
                        break 'outer;
                    }
                    if u.gcd(v) != BigInt::one() {
                        continue;
                    }
                    if eval_homog(&a, &u, v).is_zero() {
                        let r = Scalar::rational(num_rational::BigRational::new(u.clone(), v.clone()));
                        if q.eval(&r).is_zero() && !found.contains(&r) {
                            found.push(r);
                        }
                        while let Some(next) = divide_linear(&a, &u, v) {
                            a = next;
                        }
                    }
                }
            }
        }
    }
    if a.len() > 2 {
        let lead = a.last().expect("nonempty").abs();
        let cst = a[0].abs();
        let sqrt3 = Scalar::int(1) + Scalar::int(2) * Scalar::omega();
        'quad: for d in divisors(&lead) {
            for f in divisors(&cst) {
                let four_df: BigInt = BigInt::from(4) * &d * &f;
                let kmax = (&four_df / BigInt::from(3)).sqrt();
                let mut k = BigInt::one();
                while k <= kmax {
                    work += 1;
                    if work > WORK_LIMIT {
                        break 'quad;
                    }
                    let e2 = &four_df - BigInt::from(3) * &k * &k;
                    let e = e2.sqrt();
                    if &e * &e == e2 {
                        let signs = if e.is_zero() { vec![e.clone()] } else { vec![e.clone(), -e.clone()] };
                        for e in signs {
                            let two_d = Scalar::from(BigInt::from(2) * &d);
                            for sgn in [1i64, -1] {
                                let beta = (Scalar::from(e.clone()) + Scalar::from(&k * sgn) * &sqrt3) / &two_d;
                                if q.eval(&beta).is_zero() && !found.contains(&beta) {
                                    found.push(beta);
                                }
                            }
                        }
                    }
                    k += 1;
                }
                if found.len() == deg {
                    break 'quad;
                }
            }
        }
    }
    found.sort();
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_and_omega_roots() {
        let w = Scalar::omega();
        let roots = vec![
            Scalar::frac(-3, 2),
            Scalar::int(5),
            &w * Scalar::frac(2, 3),
            Scalar::int(1) - Scalar::int(2) * w.pow(2),
        ];
        let p = UPoly::from_roots(&roots).scale(&Scalar::frac(7, 5));
        let mut expected = roots.clone();
        expected.sort();
        assert_eq!(roots_in_field(&p), expected);
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        assert!(roots_in_field(&UPoly::from_i64(&[-2, 0, 1])).is_empty());
        assert!(roots_in_field(&UPoly::from_i64(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn zero_root_and_multiplicity() {
        let p = UPoly::from_roots(&[Scalar::zero(), Scalar::zero(), Scalar::int(3)]);
        assert_eq!(roots_in_field(&p), vec![Scalar::zero(), Scalar::int(3)]);
    }
}
