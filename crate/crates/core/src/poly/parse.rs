use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use super::{Monomial, Polynomial, Ring};
use crate::arith::Field;

/// A syntax error; `col` is a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {col}: {msg}")]
pub struct ParseError {
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(ParseError { col, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    ring: &'a Arc<Ring>,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { col: self.col(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let col = self.col();
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(ParseError { col, msg: "divisor must be a nonzero constant".into() });
                }
                let inv = d.terms()[0].1.inv().expect("nonzero");
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>, ParseError> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let e = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                i64::try_from(n).or_else(|_| self.err("exponent too large"))?
            }
            _ => return self.err("expected an integer exponent"),
        };
        if paren && !self.eat(')') {
            return self.err("expected `)`");
        }
        if e > i64::from(i32::MAX) {
            return self.err("exponent too large");
        }
        Ok(if neg { -e } else { e })
    }

    fn power(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        let e = self.exponent()?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        if base.is_monomial() {
            let (m, c) = &base.terms()[0];
            let inv_c = c.inv().expect("stored coefficients are nonzero");
            let mono = Monomial::new(m.exps().iter().map(|x| x * e as i32).collect());
            let mut coeff = F::one();
            for _ in 0..e.unsigned_abs() {
                coeff = coeff.mul(&inv_c);
            }
            return Ok(Polynomial::from_terms(self.ring, [(mono, coeff)]));
        }
        Err(ParseError { col, msg: "negative exponent needs a monomial base".into() })
    }

    fn atom(&mut self) -> Result<Polynomial<F>, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, F::from_bigint(n)))
            }
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.ring.index_of(&name) {
                    self.pos += 1;
                    Ok(Polynomial::var(self.ring, i))
                } else if let Some(c) = F::scalar_symbol(&name) {
                    self.pos += 1;
                    Ok(Polynomial::constant(self.ring, c))
                } else {
                    self.err(format!("undeclared variable `{name}`"))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses text like `-4*x^2*y + 3*z - 7` in `ring`. Operators `*` and `^` are
/// mandatory; division is allowed by nonzero constants only.
pub fn parse_polynomial<F: Field>(src: &str, ring: &Arc<Ring>) -> Result<Polynomial<F>, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError { col: 1, msg: "empty polynomial".into() });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end_col: src.chars().count() + 1,
        ring,
        _field: std::marker::PhantomData,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a field element literal such as `-3/4` or `(t^2+1)/(2*t)`.
pub fn parse_scalar<F: Field>(src: &str) -> Result<F, ParseError> {
    let ring = Ring::new(Vec::<String>::new());
    let p: Polynomial<F> = parse_polynomial(src, &ring)?;
    Ok(p.terms().first().map(|(_, c)| c.clone()).unwrap_or_else(F::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{RatFunc, Rational, UniPoly};

    #[test]
    fn parses_terms_and_precedence() {
        let r = Ring::new(["x", "y"]);
        let p: Polynomial<Rational> = parse_polynomial("-4*x^2*y + 3*y - 7", &r).unwrap();
        assert_eq!(p.len(), 3);
        let q: Polynomial<Rational> = parse_polynomial("(x+y)^2 - x*(x+2*y)", &r).unwrap();
        assert_eq!(q, parse_polynomial("y^2", &r).unwrap());
        let h: Polynomial<Rational> = parse_polynomial("x/2 + 1/3", &r).unwrap();
        assert_eq!(h.to_string(), "1/2*x + 1/3");
    }

    #[test]
    fn reports_columns() {
        let r = Ring::new(["x", "y"]);
        let e = parse_polynomial::<Rational>("2*w+1", &r).unwrap_err();
        assert_eq!(e.col, 3);
        assert!(e.msg.contains("undeclared"));
        let e = parse_polynomial::<Rational>("x + ", &r).unwrap_err();
        assert_eq!(e.col, 5);
        assert!(parse_polynomial::<Rational>("x/y", &r).is_err());
        assert!(parse_polynomial::<Rational>("2x", &r).is_err());
        assert!(parse_polynomial::<Rational>("   ", &r).is_err());
    }

    #[test]
    fn laurent_exponents() {
        let r = Ring::new(["x", "l"]);
        let p: Polynomial<Rational> = parse_polynomial("2*x*l^-1 + 3", &r).unwrap();
        assert!(p.is_laurent());
        assert_eq!(p.to_string(), "2*x*l^-1 + 3");
        assert_eq!(parse_polynomial::<Rational>(&p.to_string(), &r).unwrap(), p);
    }

    #[test]
    fn rational_function_scalars() {
        let c: RatFunc = parse_scalar("(t^2+1)/(2*t)").unwrap();
        let want = RatFunc::new(
            UniPoly::new(vec![1.into(), 0.into(), 1.into()].into_iter().map(Rational::from_integer).collect()),
            UniPoly::new(vec![0.into(), 2.into()].into_iter().map(Rational::from_integer).collect()),
        )
        .unwrap();
        assert_eq!(c, want);
        assert_eq!(parse_scalar::<RatFunc>(&c.to_string()).unwrap(), c);
        let r = Ring::new(["x"]);
        let p: Polynomial<RatFunc> = parse_polynomial("t*x - (t+1)/t*x^2 + t^2", &r).unwrap();
        assert_eq!(parse_polynomial::<RatFunc>(&p.to_string(), &r).unwrap(), p);
    }
}
