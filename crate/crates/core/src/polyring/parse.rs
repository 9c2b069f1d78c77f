//! Polynomial text format.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)? | '(' poly ')' ('^' uint)?
//! coeff  := int | int '/' uint          (fractions over Q only)
//! var    := [a-zA-Z][a-zA-Z0-9]*
//! ```
//!
//! Whitespace is insignificant. Everything [`MultiPoly`]'s `Display` emits is
//! accepted, so `parse(format(p)) == p`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::domain::Domain;
use crate::polyring::poly::{MultiPoly, PolyRing};

impl PolyRing {
    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        let mut p = Parser { ring: self, src: text.as_bytes(), pos: 0 };
        let poly = p.poly()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(poly)
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax { pos: self.pos, message: message.to_string() }
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.coeff()?,
            Some(c) if c.is_ascii_alphabetic() || c == b'(' => self.factor()?,
            Some(_) => return Err(self.error("expected a coefficient, variable or '('")),
            None => return Err(self.error("unexpected end of input")),
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let idx = self
                    .ring
                    .var_index(name)
                    .ok_or_else(|| Error::UnknownVariable { name: name.to_string(), pos: start })?;
                self.ring.var(idx)
            }
            Some(_) => return Err(self.error("expected a variable or '('")),
            None => return Err(self.error("unexpected end of input")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            let e = u32::try_from(&e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits form an integer"))
    }

    fn coeff(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let start = self.pos;
        let num = self.uint()?;
        let value = if self.peek() == Some(b'/') {
            let slash = self.pos;
            self.pos += 1;
            self.skip_ws();
            let den = self.uint()?;
            if den.is_zero() {
                return Err(Error::Syntax { pos: slash, message: "zero denominator".into() });
            }
            if self.ring.domain() != Domain::Rationals {
                let text = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                return Err(Error::CoefficientNotInDomain(text));
            }
            BigRational::new(num, den)
        } else {
            BigRational::from_integer(num)
        };
        let c = self.ring.domain().from_rational(&value)?;
        Ok(self.ring.constant(c))
    }
}
