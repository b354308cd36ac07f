//! Expression parser for forms: `+ - * / ^`, parentheses, rational literals, `w`,
//! the variable letters and caller-bound parameter names.

use std::collections::BTreeMap;

use conet_kernel::Scalar;

use crate::form::{Exp, HForm, Vars};
use crate::PolyError;

type Poly = BTreeMap<Exp, Scalar>;

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: Vars,
    params: &'a [(&'a str, Scalar)],
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, PolyError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(cs[st..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

fn constant(c: Scalar) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert([0, 0, 0], c);
    }
    p
}

fn add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let mut r = a.clone();
    for (e, c) in b {
        let t = r.entry(*e).or_default();
        *t += &(c * Scalar::int(sign));
        if t.is_zero() {
            r.remove(e);
        }
    }
    r
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut r = Poly::new();
    for (x, c) in a {
        for (y, d) in b {
            *r.entry([x[0] + y[0], x[1] + y[1], x[2] + y[2]]).or_default() += c * d;
        }
    }
    r.retain(|_, c| !c.is_zero());
    r
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, what: &str) -> PolyError {
        PolyError::Parse(format!("{what} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                add(&Poly::new(), &self.term()?, -1)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.term()?;
            acc = add(&acc, &t, if c == '+' { 1 } else { -1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let f = self.unary()?;
            if c == '*' {
                acc = mul(&acc, &f);
            } else {
                let d = match f.len() {
                    1 if f.contains_key(&[0, 0, 0]) => f[&[0, 0, 0]].clone(),
                    _ => return Err(self.err("division by a non-constant")),
                };
                let inv = d.inv().ok_or_else(|| self.err("division by zero"))?;
                acc = mul(&acc, &constant(inv));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, PolyError> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(add(&Poly::new(), &self.unary()?, -1));
        }
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err(self.err("expected exponent"));
            };
            self.pos += 1;
            let n: u32 = n.parse().map_err(|_| self.err("bad exponent"))?;
            let mut r = constant(Scalar::one());
            for _ in 0..n {
                r = mul(&r, &base);
            }
            return Ok(r);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(constant(n.parse::<Scalar>().map_err(PolyError::Kernel)?)),
            Tok::Op('(') => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::Ident(id) => {
                if let Some(i) = self.vars.names().iter().position(|n| *n == id) {
                    let mut e = [0; 3];
                    e[i] = 1;
                    return Ok([(e, Scalar::one())].into_iter().collect());
                }
                if id == "w" {
                    return Ok(constant(Scalar::omega()));
                }
                match self.params.iter().find(|(n, _)| *n == id) {
                    Some((_, v)) => Ok(constant(v.clone())),
                    None => Err(PolyError::Parse(format!("unknown identifier {id:?}"))),
                }
            }
            Tok::Op(c) => Err(self.err(&format!("unexpected {c:?}"))),
        }
    }
}

/// Parses a homogeneous form; `degree` fixes the degree of a zero result and is checked otherwise.
pub fn parse_form_with(
    s: &str,
    vars: Vars,
    params: &[(&str, Scalar)],
    degree: Option<u32>,
) -> Result<HForm, PolyError> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0, vars, params };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    let d = match (poly.keys().next(), degree) {
        (Some(e), _) => e.iter().sum(),
        (None, Some(d)) => d,
        (None, None) => 0,
    };
    if let Some(want) = degree {
        if !poly.is_empty() && want != d {
            return Err(PolyError::DegreeMismatch);
        }
    }
    Ok(HForm::from_terms(d, poly)?.with_vars(vars))
}

/// Parses a form in `X, Y, Z`.
pub fn parse_form(s: &str) -> Result<HForm, PolyError> {
    parse_form_with(s, Vars::Xyz, &[], None)
}

/// Parses a form in `A, B, C`.
pub fn parse_abc(s: &str) -> Result<HForm, PolyError> {
    parse_form_with(s, Vars::Abc, &[], None)
}

/// Shorthand for tests and embedded data; panics on malformed input.
pub fn f(s: &str) -> HForm {
    parse_form(s).unwrap_or_else(|e| panic!("bad form {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let q = f("(X-Z)*(X+2*Z)");
        assert_eq!(q, f("X^2 + X*Z - 2*Z^2"));
        assert_eq!(f("-X^2/2 + w*Y*Z").coeff([2, 0, 0]), Scalar::frac(-1, 2));
        assert_eq!(f("-X^2/2 + w*Y*Z").coeff([0, 1, 1]), Scalar::omega());
        let t = parse_form_with("X^2 - t*Z^2", Vars::Xyz, &[("t", Scalar::int(3))], None).unwrap();
        assert_eq!(t, f("X^2-3*Z^2"));
        assert!(parse_form("X^2 + Y").is_err());
        assert!(parse_form("X^2 + q").is_err());
        assert!(parse_form("X/Y").is_err());
        assert_eq!(parse_form_with("0", Vars::Xyz, &[], Some(3)).unwrap(), HForm::zero(3));
    }

    #[test]
    fn text_form_round_trips() {
        let g = f("(1/2-3*w)*X^2*Y - 7*Z^3 + w*X*Y*Z");
        assert_eq!(parse_form(&g.to_string()).unwrap(), g);
    }
}
