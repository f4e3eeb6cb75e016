//! Reading rational functions from plain infix text such as
//! `(1-q^2*t)/(1-q)` or `1/a + 2`.

use super::field::Field;
use super::poly::Vars;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::str::FromStr;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at byte {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div(&self.factor()?)?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c >= 0x80 => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i64 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            return Field::powi(&base, if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(txt.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::from_poly(super::poly::MultiPoly::constant(Vars::QT, n)))
            }
            Some(_) => {
                let rest = &self.s[self.pos..];
                for (name, val) in [
                    ("alpha", RatFunc::alpha as fn() -> RatFunc),
                    ("α", RatFunc::alpha),
                    ("a", RatFunc::alpha),
                    ("q", RatFunc::q),
                    ("t", RatFunc::t),
                ] {
                    if rest.starts_with(name.as_bytes()) {
                        self.pos += name.len();
                        return Ok(val());
                    }
                }
                self.err("unknown symbol")
            }
            None => self.err("unexpected end of input"),
        }
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_expressions() {
        let a: RatFunc = "(1-q^2)/(1-q)".parse().unwrap();
        assert_eq!(a, "1+q".parse().unwrap());
        let b: RatFunc = "t^-1 * t".parse().unwrap();
        assert_eq!(b, RatFunc::from_int(1));
        let c: RatFunc = "-2(q-t)".parse().unwrap();
        assert_eq!(c, "2t - 2q".parse().unwrap());
        assert!("q +".parse::<RatFunc>().is_err());
        assert!("x".parse::<RatFunc>().is_err());
        let j: RatFunc = "1/a".parse().unwrap();
        assert_eq!(j, RatFunc::alpha().inv().unwrap());
    }
}
