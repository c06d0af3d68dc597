//! Scalar text grammar shared by every file format and the CLI.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := digits ['/' digits] ['i'] | 'i' | ident ['^' digits]
//! ```
//!
//! A Gaussian constant such as `-3+2i` is read as the sum of its two terms.
//! `i` is reserved for the imaginary unit and cannot name a parameter.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::gauss::GaussRat;
use super::poly::{ParamSet, Poly};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    ring: &'a Arc<ParamSet>,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse { input: self.src.to_string(), reason: reason.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().expect("digit");
                let mut q = BigRational::from_integer(num);
                if self.chars.get(self.pos) == Some(&'/') {
                    self.pos += 1;
                    let den = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    q /= BigRational::from_integer(den);
                }
                // `2i` binds the unit to the number; `2i2` or `2ix` is not a unit suffix.
                if self.chars.get(self.pos) == Some(&'i')
                    && !self
                        .chars
                        .get(self.pos + 1)
                        .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                    return Ok(Poly::constant(GaussRat::new(BigRational::zero(), q)));
                }
                Ok(Poly::constant(GaussRat::real(q)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.ident();
                if name == "i" {
                    return Ok(Poly::constant(GaussRat::i()));
                }
                let mut p = self.ring.var(&name)?;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
                    let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    p = p.pow(e);
                }
                Ok(p)
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.checked_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.checked_sub(&t)? } else { acc.checked_add(&t)? };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                None => break,
                Some(c) => return Err(self.err(format!("unexpected `{c}`"))),
            }
            self.pos += 1;
        }
        Ok(acc)
    }
}

/// Parses `text` as a polynomial over the parameters of `ring`.
pub fn parse_poly(ring: &Arc<ParamSet>, text: &str) -> Result<Poly> {
    let mut p = Parser { src: text, chars: text.chars().collect(), pos: 0, ring };
    if p.peek().is_none() {
        return Err(p.err("empty scalar"));
    }
    p.poly()
}

/// Parses a parameter-free scalar.
pub fn parse_gauss(text: &str) -> Result<GaussRat> {
    let p = parse_poly(&ParamSet::empty(), text)?;
    Ok(p.as_constant().expect("no parameters"))
}

impl ParamSet {
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Poly> {
        parse_poly(self, text)
    }
}

impl std::str::FromStr for GaussRat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_gauss(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn grammar_examples() {
        let ring = ParamSet::new(["lambda", "theta", "alpha2"]).unwrap();
        assert_eq!(parse_gauss("1/2").unwrap(), GaussRat::ratio(1, 2));
        let z = parse_gauss("-3+2i").unwrap();
        assert_eq!(z, GaussRat::from_int(-3) + GaussRat::from_int(2) * GaussRat::i());
        let p = ring.parse("2*alpha2+1").unwrap();
        assert_eq!(p, Poly::from_int(2) * ring.var("alpha2").unwrap() + Poly::one());
        let q = ring.parse("lambda*theta^2").unwrap();
        assert_eq!(q, ring.var("lambda").unwrap() * ring.var("theta").unwrap().pow(2));
        assert_eq!(parse_gauss("2*i").unwrap(), GaussRat::from_int(2) * GaussRat::i());
        assert_eq!(parse_gauss("1/2i").unwrap(), GaussRat::ratio(1, 2) * GaussRat::i());
        assert_eq!(parse_gauss(" - 1/3 ").unwrap(), GaussRat::ratio(-1, 3));
    }

    #[test]
    fn rejects_bad_input() {
        let ring = ParamSet::new(["t"]).unwrap();
        assert!(matches!(ring.parse("x+1"), Err(Error::UnknownParam(_))));
        assert!(ring.parse("1/0").is_err());
        assert!(ring.parse("").is_err());
        assert!(ring.parse("2**t").is_err());
        assert!(ring.parse("t^").is_err());
        assert!(parse_gauss("lambda").is_err());
    }

    #[test]
    fn display_reparses() {
        let ring = ParamSet::new(["lambda", "theta"]).unwrap();
        for s in ["lambda^2-theta^2", "-1/4*theta+3i*lambda-2i", "theta+2i*theta+1+2i", "-i", "0"] {
            let p = ring.parse(s).unwrap();
            assert_eq!(ring.parse(&p.to_string()).unwrap(), p, "{s} -> {p}");
        }
    }
}
