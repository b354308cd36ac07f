//! Elements of Q(w), w a primitive cube root of unity.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::KernelError;

/// `a + b*w` with `w^2 = -1 - w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Scalar { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Scalar { a, b: BigRational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn omega() -> Self {
        Scalar { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn omega2() -> Self {
        Scalar { a: -BigRational::one(), b: -BigRational::one() }
    }

    /// Rational part.
    pub fn re(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of w.
    pub fn om(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate, w -> w^2.
    pub fn conj(&self) -> Self {
        Scalar { a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm down to Q: a^2 - ab + b^2.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(Self::rational(self.a.recip()));
        }
        let n = self.norm();
        let c = self.conj();
        Some(Scalar { a: c.a / &n, b: c.b / n })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer value if this is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.b.is_zero() && self.a.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.a.denom().lcm(self.b.denom())
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.b.is_zero() && o.b.is_zero() {
            return Scalar::rational(&self.a * &o.a);
        }
        let bd = &self.b * &o.b;
        Scalar {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::rational(r)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}*w", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

fn parse_rat(s: &str) -> Result<BigRational, KernelError> {
    let bad = || KernelError::Parse(s.to_string());
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|_| bad())?;
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl FromStr for Scalar {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix('w') else {
            return Ok(Scalar::rational(parse_rat(&t)?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with(['+', '-']))
            .map(|(i, _)| i);
        let (a, b) = match split {
            Some(i) => (parse_rat(&body[..i])?, &body[i..]),
            None => (BigRational::zero(), body),
        };
        let b = match b {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            _ => {
                let b = b.strip_prefix('+').unwrap_or(b);
                match b.strip_prefix('-') {
                    Some(r) if r.is_empty() => -BigRational::one(),
                    Some(r) => -parse_rat(r)?,
                    None => parse_rat(b)?,
                }
            }
        };
        Ok(Scalar { a, b })
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -&self.a, b: -&self.b }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, |x, y| Scalar { a: &x.a + &y.a, b: &x.b + &y.b });
binop!(Sub, sub, |x, y| Scalar { a: &x.a - &y.a, b: &x.b - &y.b });
binop!(Mul, mul, |x, y| x.mul_ref(y));
binop!(Div, div, |x, y| x.mul_ref(&y.inv().expect("division by zero")));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self -= &o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = self.mul_ref(o);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(it: I) -> Scalar {
        it.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(it: I) -> Scalar {
        it.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(it: I) -> Scalar {
        it.fold(Scalar::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn omega_relations() {
        let w = Scalar::omega();
        assert_eq!(w.pow(3), Scalar::one());
        assert!((Scalar::one() + &w + w.pow(2)).is_zero());
        assert_eq!(w.pow(2), Scalar::omega2());
        assert_eq!(w.conj(), Scalar::omega2());
    }

    #[test]
    fn inverse_and_norm() {
        let x = s("3/2-5*w");
        assert_eq!(&x * x.inv().unwrap(), Scalar::one());
        assert_eq!(Scalar::rational(x.norm()), &x * x.conj());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn text_round_trip() {
        for t in ["0", "-7", "3/4", "1/2+3*w", "0-1*w", "-2/3-5/7*w", "0+1*w"] {
            assert_eq!(s(t).to_string(), t);
        }
        assert_eq!(s("w"), Scalar::omega());
        assert_eq!(s("-w"), -Scalar::omega());
        assert_eq!(s("1/2+-3*w"), s("1/2-3*w"));
        assert_eq!(s("2/4"), Scalar::frac(1, 2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }
}
